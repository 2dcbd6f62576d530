#pragma once

#include <hdt/oracles.hpp>
#include <hdt/reduction_output.hpp>

#include <cstddef>

namespace hdt {

/// Parameters of the Conv3SUM reduction. epsilon is pinned to rho^4 with
/// rho = 1/(4 M n^2) so that epsilon^(3/2) = rho^6 and sqrt(epsilon) = rho^2
/// are exact rationals; the whole construction then lives in Q[sqrt(2)],
/// with sqrt(2) entering only through the diagonal gadget scaling.
struct Reduction3SumParams {
    std::size_t n = 1;
    long long max_value = 1;  // M
    Rational rho;             // 1/(4 M n^2)
    Rational epsilon;         // rho^4
    Rational epsilon_15;      // epsilon^(3/2) = rho^6
    Rational delta;           // 1 + 4 n^2 epsilon^2

    static Reduction3SumParams make(const Conv3SumInstance& inst);
};

struct GadgetPair {
    PointSet a;
    PointSet b;
};

/// The one-dimensional gadget everything is built from: number points
/// p_i^1 = (2 i eps + x_i eps^1.5, 0), p_i^2 = p_i^1 + (eps, 0) and filling
/// points q_i = ((2i + 3/2) eps, 0) on the A side; two points at (-1, 0)
/// and (1 + eps, 0) on the B side, whose gap admits exactly one aligned
/// number-point pair.
GadgetPair low_level_gadget(const Conv3SumInstance& inst, const Reduction3SumParams& params);

/// (x, y) -> (-y, x), exact quarter turn.
PointSet rotate90(const PointSet& s);

/// Scale-and-rotate onto the diagonal: A-side points (x, 0) map to
/// (x/2, x/2); B-side points are scaled about the left anchor so their gap
/// becomes 2 + eps/sqrt(2), keeping that anchor at diagonal distance 1 from
/// the origin, then rotated by pi/4. All coordinates stay in Q[sqrt(2)].
/// Inputs must lie on the x-axis.
GadgetPair diagonal_transform(const PointSet& a_low, const PointSet& b_low,
                              const Reduction3SumParams& params);

/// Four A-points around the origin plus the origin itself on the B side:
/// lower bounds on tau_x and tau_y, an upper bound on tau_y, and a diagonal
/// backstop bounding tau_x + tau_y. Together they cap feasible translations
/// to [0, (2n-1) eps]^2 (up to curvature slack) and keep the diagonal
/// gadget engaged over the whole range.
GadgetPair translation_gadget_3sum(const Reduction3SumParams& params);

/// Full instance: column, row, diagonal and translation gadgets placed at
/// x-offsets 0, 10, 20, 30. |A| = 9n + 4, |B| = 7, norm L2,
/// delta = 1 + 4 n^2 eps^2.
ReductionOutput reduce_conv3sum(const Conv3SumInstance& inst);

/// The canonical witness translation for a claimed solution (i, j):
/// (2 i eps + x_i eps^1.5, 2 j eps + x_j eps^1.5). Requires i + j < n.
Point witness_translation(std::size_t i, std::size_t j, const Conv3SumInstance& inst,
                          const Reduction3SumParams& params);

}  // namespace hdt
