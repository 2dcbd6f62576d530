#pragma once

#include <hdt/geometry.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hdt {

enum class Direction { AToB, BToA, Undirected };

Direction direction_parse(std::string_view text);  // "ab", "ba", "und"
std::string direction_str(Direction d);

/// Raised by decide_translation for norms without a full decision procedure
/// (Lp with p not in {1, 2, inf}); decide_at_translation still works there.
class UnsupportedNormError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a solve exceeds SolveOptions::deadline.
class SolverTimeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Ball {
    Point center;
};

/// One "exists a ball containing tau" disjunction.
struct BallGroup {
    std::vector<Ball> balls;
};

/// Feasible translations = intersection over groups of the union of each
/// group's closed delta-balls. All balls share the radius and norm.
struct ConstraintSystem {
    std::vector<BallGroup> groups;
    Norm norm;
    Rational delta;
    ExactScalar delta_key;  // delta (L1/Linf) or delta^p (L2/Lp)

    std::size_t ball_count() const;
};

ConstraintSystem build_constraints(const PointSet& a, const PointSet& b, const Rational& delta,
                                   const Norm& norm, Direction dir);

/// Either an exact point or a one-radical symbolic point
/// m + branch * sqrt(h2) * u with branch in {+1, -1}.
struct CandidateTranslation {
    enum class Kind { Exact, Radical };

    Kind kind = Kind::Exact;
    Point point;  // Exact

    Point m;        // Radical
    Point u;        // Radical: unnormalized direction
    ExactScalar h2; // Radical: squared scale of the radical step, >= 0
    int branch = 1;

    static CandidateTranslation exact(Point p);
    static CandidateTranslation radical(Point m, Point u, ExactScalar h2, int branch);

    bool is_exact() const { return kind == Kind::Exact; }
    /// Throws std::logic_error for radical candidates.
    const Point& exact_point() const;

    /// Sign of (x coordinate - bound), exactly.
    int compare_x(const ExactScalar& bound) const;
    int compare_y(const ExactScalar& bound) const;
    /// Sign of (x + y - bound), exactly.
    int compare_sum(const ExactScalar& bound) const;

    std::pair<double, double> approx() const;
    std::string str() const;
};

struct SolveStats {
    std::uint64_t candidates_generated = 0;
    std::uint64_t candidates_tested = 0;
};

struct DecisionResult {
    bool feasible = false;
    std::optional<CandidateTranslation> witness;
    SolveStats stats;
};

struct SolveOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Full candidate enumeration for a constraint system: for every ball its
/// center, leftmost point and (for polyhedral norms) polygon corners; for
/// every pair of distinct balls all boundary intersection points. If the
/// feasible region is nonempty, its lexicographically minimal point is in
/// this set.
std::vector<CandidateTranslation> generate_candidates(const ConstraintSystem& sys);

/// Exact membership of a candidate in every group's union.
bool test_candidate(const CandidateTranslation& tau, const ConstraintSystem& sys);

/// Exact decision of "exists tau with the chosen Hausdorff distance of
/// (A, B + tau) at most delta" (closed balls). Norm must be L1, L2 or Linf.
DecisionResult decide_translation(const PointSet& a, const PointSet& b, const Rational& delta,
                                  const Norm& norm, Direction dir, const SolveOptions& opts = {});

DecisionResult decide_translation(const ConstraintSystem& sys, const SolveOptions& opts = {});

/// Exact check at one fixed translation; works for every integer p >= 1
/// and Linf.
bool decide_at_translation(const PointSet& a, const PointSet& b, const Point& tau,
                           const ExactScalar& delta, const Norm& norm, Direction dir);

/// Certified bracket (lo, hi] around the optimal translated distance:
/// lo < optimum <= hi and hi - lo <= tol, by bisection on rational
/// thresholds.
std::pair<Rational, Rational> value_bisect(const PointSet& a, const PointSet& b, const Norm& norm,
                                           Direction dir, const Rational& tol,
                                           const SolveOptions& opts = {});

}  // namespace hdt
