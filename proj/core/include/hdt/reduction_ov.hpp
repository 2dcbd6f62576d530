#pragma once

#include <hdt/oracles.hpp>
#include <hdt/reduction_output.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace hdt {

/// Parameters of the Orthogonal Vectors reduction. For L1 and Linf the
/// defaults are epsilon = 1/(20 m n d) with spacing epsilon^2; for power
/// norms Lp (including L2) epsilon = 1/(40 p m n d) with spacing
/// epsilon^(2p). The decision threshold is always 1.
struct OvReductionParams {
    Norm norm = Norm::l1();
    std::size_t m = 1, n = 1, d = 1;
    int p = 1;  // key exponent of the generalized construction (1 for L1/Linf)
    Rational epsilon;
    Rational spacing;

    static OvReductionParams for_norm(const Norm& norm, std::size_t m, std::size_t n,
                                      std::size_t d);
    /// Same, with a caller-chosen epsilon (spacing recomputed from it).
    static OvReductionParams with_epsilon(const Norm& norm, std::size_t m, std::size_t n,
                                          std::size_t d, Rational epsilon);
};

/// Encodes one binary vector as d points: entry i (1-based) sits at height
/// i*epsilon, pushed right by `spacing` when the bit is 0.
PointSet vector_gadget(const std::vector<std::uint8_t>& v, const OvReductionParams& params);

/// vector_gadget of the bitwise complement.
PointSet mirrored_vector_gadget(const std::vector<std::uint8_t>& v,
                                const OvReductionParams& params);

/// Two zero-vector gadgets flanking the construction; pins the feasible
/// horizontal translations to a narrow window.
PointSet translation_gadget_ov(const OvReductionParams& params);

/// {(-1/2, 0), (1/2, 0)}: guarantees the A-to-B direction is never the
/// binding one, making the reduction work undirected.
PointSet undirected_gadget();

struct OvPreprocessResult {
    OvInstance instance;             // filtered instance (valid when no forced answer)
    std::optional<bool> forced_answer;
};

/// Short-circuits instances containing the all-zeros vector (positive) and
/// drops all-ones vectors; if a side empties out, the answer is forced
/// negative. The surviving instance has vectors with at least one 0 and one
/// 1 entry each.
OvPreprocessResult preprocess_ov(const OvInstance& inst);

/// The exact isometry mapping L1 geometry onto Linf: (x, y) -> (x-y, x+y).
/// Distances satisfy ||T p - T q||_inf = ||p - q||_1, and the map is
/// rational, so thresholds carry over unchanged.
Point l1_to_linf_point(const Point& p);
PointSet l1_to_linf(const PointSet& s);

/// Builds the Hausdorff-under-translation instance equivalent to the OV
/// instance, at threshold 1. Requires a preprocessed instance (every vector
/// has a 0 and a 1 entry). For Linf the L1 construction is embedded through
/// l1_to_linf.
ReductionOutput reduce_ov(const OvInstance& inst, const OvReductionParams& params);
ReductionOutput reduce_ov(const OvInstance& inst, const Norm& norm);

}  // namespace hdt
