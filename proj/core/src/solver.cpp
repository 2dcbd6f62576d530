#include <hdt/solver.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hdt {

namespace {

const Rational kHalf(1, 2);

int scalar_cmp(const ExactScalar& a, const ExactScalar& b) { return (a - b).sign(); }

bool lex_less(const Point& a, const Point& b) {
    int cx = scalar_cmp(a.x, b.x);
    if (cx != 0) return cx < 0;
    return scalar_cmp(a.y, b.y) < 0;
}

ExactScalar min_scalar(const ExactScalar& a, const ExactScalar& b) { return a <= b ? a : b; }
ExactScalar max_scalar(const ExactScalar& a, const ExactScalar& b) { return a <= b ? b : a; }

/// Axis-aligned bounding box of the feasible region: per group the union of
/// balls fits in [min c - delta, max c + delta]^2, and the region is the
/// intersection over groups. Empty box means provably infeasible; pruning
/// against it never discards a point of the feasible region.
struct Box {
    ExactScalar xmin, xmax, ymin, ymax;
    bool empty = false;
};

Box feasibility_box(const ConstraintSystem& sys) {
    ExactScalar delta{sys.delta};
    Box box;
    bool first = true;
    for (const auto& g : sys.groups) {
        ExactScalar xmin = g.balls[0].center.x, xmax = xmin;
        ExactScalar ymin = g.balls[0].center.y, ymax = ymin;
        for (const auto& b : g.balls) {
            if (b.center.x < xmin) xmin = b.center.x;
            if (xmax < b.center.x) xmax = b.center.x;
            if (b.center.y < ymin) ymin = b.center.y;
            if (ymax < b.center.y) ymax = b.center.y;
        }
        xmin -= delta; xmax += delta; ymin -= delta; ymax += delta;
        if (first) {
            box = Box{xmin, xmax, ymin, ymax, false};
            first = false;
        } else {
            box.xmin = max_scalar(box.xmin, xmin);
            box.xmax = min_scalar(box.xmax, xmax);
            box.ymin = max_scalar(box.ymin, ymin);
            box.ymax = min_scalar(box.ymax, ymax);
        }
    }
    if (first || box.xmax < box.xmin || box.ymax < box.ymin) box.empty = true;
    return box;
}

bool box_contains(const Box& box, const CandidateTranslation& c) {
    return c.compare_x(box.xmin) >= 0 && c.compare_x(box.xmax) <= 0 &&
           c.compare_y(box.ymin) >= 0 && c.compare_y(box.ymax) <= 0;
}

/// Ball bbox clamped against the feasibility box; empty when they miss.
struct ClampedBall {
    Point center;
    ExactScalar xlo, xhi, ylo, yhi;
};

// ---------------------------------------------------------------------------
// Candidate emission. The enumeration order here is the candidate index
// order: deterministic and shared by generate_candidates and the decision
// loop.
// ---------------------------------------------------------------------------

// L1 geometry is handled in a rotated work frame: (x, y) -> (x+y, x-y) turns
// the L1 ball into an axis-aligned square of the same radius, and the inverse
// map is rational.
Point to_work_frame(const Norm& norm, const Point& p) {
    if (norm.kind == Norm::Kind::L1) return {p.x + p.y, p.x - p.y};
    return p;
}

Point from_work_frame(const Norm& norm, const Point& q) {
    if (norm.kind == Norm::Kind::L1)
        return {(q.x + q.y) * ExactScalar(kHalf), (q.x - q.y) * ExactScalar(kHalf)};
    return q;
}

template <typename Emit>
bool per_ball_candidates(const Point& c, const ExactScalar& delta, const Norm& norm, Emit&& emit) {
    if (emit(CandidateTranslation::exact(c))) return true;
    if (emit(CandidateTranslation::exact({c.x - delta, c.y}))) return true;
    if (emit(CandidateTranslation::exact({c.x + delta, c.y}))) return true;
    switch (norm.kind) {
        case Norm::Kind::L1:
            if (emit(CandidateTranslation::exact({c.x, c.y - delta}))) return true;
            if (emit(CandidateTranslation::exact({c.x, c.y + delta}))) return true;
            break;
        case Norm::Kind::Linf:
            if (emit(CandidateTranslation::exact({c.x - delta, c.y - delta}))) return true;
            if (emit(CandidateTranslation::exact({c.x - delta, c.y + delta}))) return true;
            if (emit(CandidateTranslation::exact({c.x + delta, c.y - delta}))) return true;
            if (emit(CandidateTranslation::exact({c.x + delta, c.y + delta}))) return true;
            break;
        default:
            break;
    }
    return false;
}

struct WorkSquare {
    ExactScalar vx[2];  // x of the two vertical edges
    ExactScalar hy[2];  // y of the two horizontal edges

    WorkSquare(const Point& c, const ExactScalar& delta)
        : vx{c.x - delta, c.x + delta}, hy{c.y - delta, c.y + delta} {}

    bool x_in_range(const ExactScalar& x) const { return vx[0] <= x && x <= vx[1]; }
    bool y_in_range(const ExactScalar& y) const { return hy[0] <= y && y <= hy[1]; }
};

template <typename Emit>
bool square_pair_candidates(const Norm& norm, const Point& c1, const Point& c2,
                            const ExactScalar& delta, Emit&& emit) {
    WorkSquare s1(to_work_frame(norm, c1), delta);
    WorkSquare s2(to_work_frame(norm, c2), delta);

    auto emit_work = [&](const ExactScalar& x, const ExactScalar& y) {
        return emit(CandidateTranslation::exact(from_work_frame(norm, Point{x, y})));
    };

    // Perpendicular edge crossings.
    for (int iv = 0; iv < 2; ++iv)
        for (int ih = 0; ih < 2; ++ih) {
            if (s2.x_in_range(s1.vx[iv]) && s1.y_in_range(s2.hy[ih]))
                if (emit_work(s1.vx[iv], s2.hy[ih])) return true;
            if (s1.x_in_range(s2.vx[iv]) && s2.y_in_range(s1.hy[ih]))
                if (emit_work(s2.vx[iv], s1.hy[ih])) return true;
        }

    // Collinear overlaps of parallel edges: emit both overlap endpoints.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (s1.vx[i] == s2.vx[j]) {
                ExactScalar lo = max_scalar(s1.hy[0], s2.hy[0]);
                ExactScalar hi = min_scalar(s1.hy[1], s2.hy[1]);
                if (lo <= hi) {
                    if (emit_work(s1.vx[i], lo)) return true;
                    if (emit_work(s1.vx[i], hi)) return true;
                }
            }
            if (s1.hy[i] == s2.hy[j]) {
                ExactScalar lo = max_scalar(s1.vx[0], s2.vx[0]);
                ExactScalar hi = min_scalar(s1.vx[1], s2.vx[1]);
                if (lo <= hi) {
                    if (emit_work(lo, s1.hy[i])) return true;
                    if (emit_work(hi, s1.hy[i])) return true;
                }
            }
        }
    return false;
}

template <typename Emit>
bool circle_pair_candidates(const Point& c1, const Point& c2, const ExactScalar& delta_sq,
                            Emit&& emit) {
    Point dv = c2 - c1;
    ExactScalar d2 = dv.x * dv.x + dv.y * dv.y;
    int cmp = scalar_cmp(d2, delta_sq * ExactScalar(4));
    if (cmp > 0) return false;
    Point mid{(c1.x + c2.x) * ExactScalar(kHalf), (c1.y + c2.y) * ExactScalar(kHalf)};
    if (cmp == 0) return emit(CandidateTranslation::exact(mid));
    // Two proper crossings: mid +- sqrt(h2) * perp(dv) with
    // h2 = (delta^2 - d2/4) / d2, so that |sqrt(h2) * perp(dv)| is the
    // half-chord. Exact in Q[sqrt(2)], one radical layer.
    Point u{-dv.y, dv.x};
    ExactScalar h2 = (delta_sq - d2 * ExactScalar(Rational(1, 4))) / d2;
    if (emit(CandidateTranslation::radical(mid, u, h2, +1))) return true;
    return emit(CandidateTranslation::radical(mid, u, h2, -1));
}

template <typename Emit>
bool pair_candidates(const Norm& norm, const Point& c1, const Point& c2, const ExactScalar& delta,
                     const ExactScalar& delta_key, Emit&& emit) {
    if (c1 == c2) return emit(CandidateTranslation::exact({c1.x + delta, c1.y}));
    if (norm.kind == Norm::Kind::L2) return circle_pair_candidates(c1, c2, delta_key, emit);
    return square_pair_candidates(norm, c1, c2, delta, emit);
}

std::vector<Point> unique_centers(const ConstraintSystem& sys) {
    std::vector<Point> centers;
    centers.reserve(sys.ball_count());
    for (const auto& g : sys.groups)
        for (const auto& b : g.balls) centers.push_back(b.center);
    std::sort(centers.begin(), centers.end(), lex_less);
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    return centers;
}

// ---------------------------------------------------------------------------
// Membership testing.
// ---------------------------------------------------------------------------

ExactScalar exact_key_magnitude(const Norm& norm, const Point& t, const Point& c) {
    ExactScalar dx = (t.x - c.x).abs();
    ExactScalar dy = (t.y - c.y).abs();
    switch (norm.kind) {
        case Norm::Kind::L1: return dx + dy;
        case Norm::Kind::Linf: return dx < dy ? dy : dx;
        case Norm::Kind::L2: return dx * dx + dy * dy;
        case Norm::Kind::Lp: {
            unsigned e = static_cast<unsigned>(norm.p);
            return dx.pow(e) + dy.pow(e);
        }
    }
    throw std::logic_error("exact_key_magnitude: bad norm");
}

/// Per-candidate precomputation for radical membership tests.
struct RadicalContext {
    ExactScalar h2u2;  // h2 * |u|^2
};

bool ball_covers(const Norm& norm, const ExactScalar& delta_key, const Ball& ball,
                 const CandidateTranslation& t, const RadicalContext* ctx) {
    if (t.is_exact()) return exact_key_magnitude(norm, t.point, ball.center) <= delta_key;
    if (norm.kind != Norm::Kind::L2)
        throw std::logic_error("test_candidate: radical candidate under a non-L2 norm");
    // |m + s*sqrt(h2)*u - c|^2 = alpha + beta*sqrt(h2) with
    // alpha = |m-c|^2 + h2*|u|^2 and beta = 2s<m-c, u>; covered iff
    // alpha + beta*sqrt(h2) <= delta^2.
    Point w = t.m - ball.center;
    ExactScalar alpha = w.x * w.x + w.y * w.y + ctx->h2u2;
    ExactScalar beta = (w.x * t.u.x + w.y * t.u.y) * ExactScalar(2 * t.branch);
    return radical_sign({delta_key - alpha, -beta, t.h2}) >= 0;
}

bool group_covers(const Norm& norm, const ExactScalar& delta_key, const BallGroup& g,
                  const CandidateTranslation& t, const RadicalContext* ctx) {
    for (const auto& ball : g.balls)
        if (ball_covers(norm, delta_key, ball, t, ctx)) return true;
    return false;
}

RadicalContext make_radical_context(const CandidateTranslation& t) {
    return {t.h2 * (t.u.x * t.u.x + t.u.y * t.u.y)};
}

/// Membership test with a mutable group order: the group that rejected a
/// candidate moves to the front, since nearby candidates tend to fail on the
/// same group. The accept/reject outcome does not depend on the order.
bool test_candidate_ordered(const CandidateTranslation& t, const ConstraintSystem& sys,
                            std::vector<std::uint32_t>& order) {
    RadicalContext ctx;
    const RadicalContext* ctx_ptr = nullptr;
    if (!t.is_exact()) {
        ctx = make_radical_context(t);
        ctx_ptr = &ctx;
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!group_covers(sys.norm, sys.delta_key, sys.groups[order[i]], t, ctx_ptr)) {
            std::rotate(order.begin(), order.begin() + i, order.begin() + i + 1);
            return false;
        }
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------

Direction direction_parse(std::string_view text) {
    std::string t(text);
    for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "ab") return Direction::AToB;
    if (t == "ba") return Direction::BToA;
    if (t == "und" || t == "undirected") return Direction::Undirected;
    throw std::invalid_argument("direction: expected ab, ba or und, got '" + std::string(text) + "'");
}

std::string direction_str(Direction d) {
    switch (d) {
        case Direction::AToB: return "ab";
        case Direction::BToA: return "ba";
        case Direction::Undirected: return "und";
    }
    return "und";
}

std::size_t ConstraintSystem::ball_count() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.balls.size();
    return n;
}

ConstraintSystem build_constraints(const PointSet& a, const PointSet& b, const Rational& delta,
                                   const Norm& norm, Direction dir) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("build_constraints: point sets must be nonempty");
    if (delta.sign() <= 0) throw std::invalid_argument("build_constraints: delta must be positive");

    ConstraintSystem sys;
    sys.norm = norm;
    sys.delta = delta;
    sys.delta_key = threshold_key(norm, ExactScalar(delta));

    auto add_a_to_b = [&] {
        // tau must satisfy: every point of A has some b+tau within delta,
        // i.e. tau is in some ball centered a - b.
        for (const auto& pa : a.points) {
            BallGroup g;
            g.balls.reserve(b.points.size());
            for (const auto& pb : b.points) g.balls.push_back({pa - pb});
            sys.groups.push_back(std::move(g));
        }
    };
    auto add_b_to_a = [&] {
        for (const auto& pb : b.points) {
            BallGroup g;
            g.balls.reserve(a.points.size());
            for (const auto& pa : a.points) g.balls.push_back({pa - pb});
            sys.groups.push_back(std::move(g));
        }
    };
    switch (dir) {
        case Direction::AToB: add_a_to_b(); break;
        case Direction::BToA: add_b_to_a(); break;
        case Direction::Undirected: add_a_to_b(); add_b_to_a(); break;
    }
    return sys;
}

CandidateTranslation CandidateTranslation::exact(Point p) {
    CandidateTranslation c;
    c.kind = Kind::Exact;
    c.point = std::move(p);
    return c;
}

CandidateTranslation CandidateTranslation::radical(Point m, Point u, ExactScalar h2, int branch) {
    CandidateTranslation c;
    c.kind = Kind::Radical;
    c.m = std::move(m);
    c.u = std::move(u);
    c.h2 = std::move(h2);
    c.branch = branch;
    return c;
}

const Point& CandidateTranslation::exact_point() const {
    if (!is_exact()) throw std::logic_error("CandidateTranslation: radical candidate has no exact point");
    return point;
}

int CandidateTranslation::compare_x(const ExactScalar& bound) const {
    if (is_exact()) return (point.x - bound).sign();
    return radical_sign({m.x - bound, u.x * ExactScalar(branch), h2});
}

int CandidateTranslation::compare_y(const ExactScalar& bound) const {
    if (is_exact()) return (point.y - bound).sign();
    return radical_sign({m.y - bound, u.y * ExactScalar(branch), h2});
}

int CandidateTranslation::compare_sum(const ExactScalar& bound) const {
    if (is_exact()) return (point.x + point.y - bound).sign();
    return radical_sign({m.x + m.y - bound, (u.x + u.y) * ExactScalar(branch), h2});
}

std::pair<double, double> CandidateTranslation::approx() const {
    if (is_exact()) return {point.x.approx(), point.y.approx()};
    double r = std::sqrt(std::max(0.0, h2.approx())) * branch;
    return {m.x.approx() + r * u.x.approx(), m.y.approx() + r * u.y.approx()};
}

std::string CandidateTranslation::str() const {
    if (is_exact()) return point.str();
    return "m=(" + m.str() + ") u=(" + u.str() + ") h2=" + h2.str() +
           " branch=" + (branch >= 0 ? std::string("+1") : std::string("-1"));
}

std::vector<CandidateTranslation> generate_candidates(const ConstraintSystem& sys) {
    if (sys.norm.kind == Norm::Kind::Lp)
        throw UnsupportedNormError(
            "generate_candidates: only L1, L2 and Linf have closed-form candidates");
    std::vector<CandidateTranslation> out;
    ExactScalar delta{sys.delta};
    std::vector<Point> centers = unique_centers(sys);
    auto collect = [&](CandidateTranslation&& c) {
        out.push_back(std::move(c));
        return false;
    };
    for (const auto& c : centers) per_ball_candidates(c, delta, sys.norm, collect);
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            pair_candidates(sys.norm, centers[i], centers[j], delta, sys.delta_key, collect);
    return out;
}

bool test_candidate(const CandidateTranslation& t, const ConstraintSystem& sys) {
    RadicalContext ctx;
    const RadicalContext* ctx_ptr = nullptr;
    if (!t.is_exact()) {
        ctx = make_radical_context(t);
        ctx_ptr = &ctx;
    }
    for (const auto& g : sys.groups)
        if (!group_covers(sys.norm, sys.delta_key, g, t, ctx_ptr)) return false;
    return true;
}

DecisionResult decide_translation(const ConstraintSystem& sys, const SolveOptions& opts) {
    if (sys.norm.kind == Norm::Kind::Lp)
        throw UnsupportedNormError(
            "decide_translation supports L1, L2 and Linf only; use decide_at_translation to "
            "check witnesses under general Lp");

    DecisionResult res;
    Box box = feasibility_box(sys);
    if (box.empty) return res;

    ExactScalar delta{sys.delta};
    std::vector<Point> centers = unique_centers(sys);

    // Balls whose bbox misses the feasibility box cannot supply a feasible
    // candidate: every candidate they generate lies inside their bbox.
    std::vector<ClampedBall> near;
    near.reserve(centers.size());
    for (const auto& c : centers) {
        ClampedBall cb{c, max_scalar(c.x - delta, box.xmin), min_scalar(c.x + delta, box.xmax),
                       max_scalar(c.y - delta, box.ymin), min_scalar(c.y + delta, box.ymax)};
        if (cb.xlo <= cb.xhi && cb.ylo <= cb.yhi) near.push_back(std::move(cb));
    }

    std::vector<std::uint32_t> order(sys.groups.size());
    std::iota(order.begin(), order.end(), 0u);

    std::uint64_t steps = 0;
    auto check_deadline = [&] {
        if (opts.deadline && ((++steps & 0x3ffu) == 0) &&
            std::chrono::steady_clock::now() > *opts.deadline)
            throw SolverTimeout("decide_translation: deadline exceeded");
    };

    bool found = false;
    auto try_candidate = [&](CandidateTranslation&& cand) {
        ++res.stats.candidates_generated;
        check_deadline();
        if (!box_contains(box, cand)) return false;
        ++res.stats.candidates_tested;
        if (test_candidate_ordered(cand, sys, order)) {
            res.feasible = true;
            res.witness = std::move(cand);
            found = true;
            return true;
        }
        return false;
    };

    for (const auto& cb : near) {
        if (per_ball_candidates(cb.center, delta, sys.norm, try_candidate)) return res;
    }
    for (std::size_t i = 0; i < near.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < near.size(); ++j) {
            check_deadline();
            // Pair candidates live in the intersection of both ball bboxes.
            if (near[i].xlo > near[j].xhi || near[j].xlo > near[i].xhi) continue;
            if (near[i].ylo > near[j].yhi || near[j].ylo > near[i].yhi) continue;
            if (pair_candidates(sys.norm, near[i].center, near[j].center, delta, sys.delta_key,
                                try_candidate))
                return res;
        }
    }
    return res;
}

DecisionResult decide_translation(const PointSet& a, const PointSet& b, const Rational& delta,
                                  const Norm& norm, Direction dir, const SolveOptions& opts) {
    return decide_translation(build_constraints(a, b, delta, norm, dir), opts);
}

bool decide_at_translation(const PointSet& a, const PointSet& b, const Point& tau,
                           const ExactScalar& delta, const Norm& norm, Direction dir) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("decide_at_translation: point sets must be nonempty");
    if (delta.sign() < 0) return false;
    ExactScalar dkey = threshold_key(norm, delta);

    std::vector<Point> bt;
    bt.reserve(b.points.size());
    for (const auto& p : b.points) bt.push_back(p + tau);

    auto covered = [&](const Point& p, const std::vector<Point>& others) {
        for (const auto& q : others)
            if (exact_key_magnitude(norm, p, q) <= dkey) return true;
        return false;
    };

    if (dir == Direction::AToB || dir == Direction::Undirected) {
        for (const auto& pa : a.points)
            if (!covered(pa, bt)) return false;
    }
    if (dir == Direction::BToA || dir == Direction::Undirected) {
        for (const auto& pb : bt)
            if (!covered(pb, a.points)) return false;
    }
    return true;
}

std::pair<Rational, Rational> value_bisect(const PointSet& a, const PointSet& b, const Norm& norm,
                                           Direction dir, const Rational& tol,
                                           const SolveOptions& opts) {
    if (norm.kind == Norm::Kind::Lp)
        throw UnsupportedNormError("value_bisect supports L1, L2 and Linf only");
    if (tol.sign() <= 0) throw std::invalid_argument("value_bisect: tol must be positive");
    if (a.empty() || b.empty())
        throw std::invalid_argument("value_bisect: point sets must be nonempty");

    // Upper bound from the untranslated distance; the optimum cannot exceed
    // it, so deciding at hi is guaranteed feasible and never queried.
    ExactScalar key0;
    switch (dir) {
        case Direction::AToB: key0 = directed_hausdorff(a, b, norm).key.magnitude; break;
        case Direction::BToA: key0 = directed_hausdorff(b, a, norm).key.magnitude; break;
        case Direction::Undirected: key0 = undirected_hausdorff(a, b, norm).magnitude; break;
    }
    Rational hi = rational_upper_bound(key0);
    // L2 keys are squared distances: above 1 the key bounds the distance,
    // below 1 the distance is at most 1.
    if (norm.kind == Norm::Kind::L2 && hi < Rational(1)) hi = Rational(1);
    if (hi < tol) hi = tol;

    // lo starts strictly below any possible optimum (distances are >= 0),
    // keeping the invariant lo < optimum <= hi from the first iteration.
    Rational lo = -(tol / Rational(2));
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / Rational(2);
        if (mid.sign() <= 0) mid = hi / Rational(2);
        if (decide_translation(a, b, mid, norm, dir, opts).feasible)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

}  // namespace hdt
