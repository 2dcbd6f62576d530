#pragma once

#include <hdt/exact_scalar.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace hdt {

struct Point {
    ExactScalar x;
    ExactScalar y;

    Point() = default;
    Point(ExactScalar px, ExactScalar py) : x(std::move(px)), y(std::move(py)) {}

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator-() const { return {-x, -y}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }

    std::string str() const { return x.str() + " " + y.str(); }
};

/// Planar norm selector. Lp with p = 1 or p = 2 canonicalizes to L1 / L2.
struct Norm {
    enum class Kind { L1, L2, Linf, Lp };

    Kind kind = Kind::L2;
    int p = 2;  // meaningful for Lp only (kept at the key exponent otherwise)

    static Norm l1() { return {Kind::L1, 1}; }
    static Norm l2() { return {Kind::L2, 2}; }
    static Norm linf() { return {Kind::Linf, 1}; }
    static Norm lp(int p);

    /// Exponent of the comparable key: 1 for L1/Linf, p for L2/Lp.
    int key_exponent() const { return (kind == Kind::L1 || kind == Kind::Linf) ? 1 : p; }
    bool is_polyhedral() const { return kind == Kind::L1 || kind == Kind::Linf; }

    bool operator==(const Norm& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Norm& o) const { return !(*this == o); }

    /// Accepts "l1", "L1", "l2", "linf", "Linf", "lp:3", "Lp:3".
    static Norm parse(std::string_view text);
    std::string str() const;
};

/// Exact comparable surrogate for the distance between two points under a
/// norm: the distance itself for L1/Linf, the p-th power of it for L2/Lp.
/// Monotone in the true distance, so ordering and threshold decisions are
/// exact without taking roots.
struct DistanceKey {
    Norm norm;
    ExactScalar magnitude;

    /// Decides "distance <= delta" exactly (compares against delta^p for
    /// power norms). A negative delta is never satisfiable.
    bool leq_threshold(const ExactScalar& delta) const;

    friend bool operator<(const DistanceKey& a, const DistanceKey& b) {
        return a.magnitude < b.magnitude;
    }
    friend bool operator==(const DistanceKey& a, const DistanceKey& b) {
        return a.magnitude == b.magnitude;
    }
    friend bool operator<=(const DistanceKey& a, const DistanceKey& b) {
        return a.magnitude <= b.magnitude;
    }
};

/// delta for L1/Linf, delta^p for L2/Lp: the key-space image of a threshold.
ExactScalar threshold_key(const Norm& norm, const ExactScalar& delta);

DistanceKey distance_key(const Point& p, const Point& q, const Norm& norm);

struct PointSet {
    std::vector<Point> points;
    std::string label;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

PointSet translate(const PointSet& s, const Point& tau);

struct DirectedHausdorff {
    DistanceKey key;
    std::size_t witness_a = 0;  // index into A attaining the max
    std::size_t witness_b = 0;  // index into B attaining the inner min
};

/// max over a in A of min over b in B, as exact keys. Ties broken towards
/// the lowest index pair. Throws std::invalid_argument on empty input.
DirectedHausdorff directed_hausdorff(const PointSet& a, const PointSet& b, const Norm& norm);

DistanceKey undirected_hausdorff(const PointSet& a, const PointSet& b, const Norm& norm);

}  // namespace hdt
