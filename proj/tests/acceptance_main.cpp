// Acceptance suite: one pass/fail line per criterion.
//
//   hdt_acceptance [--criterion N] [--workers K] [--seed S]
//
// Runs every criterion by default; exits nonzero if any fails. Disagreement
// artifacts are dumped under failures/ for replay.

#include <hdt/harness.hpp>
#include <hdt/instance_io.hpp>
#include <hdt/reduction_3sum.hpp>
#include <hdt/reduction_ov.hpp>

#include "support/test_support.hpp"

#include <atomic>
#include <chrono>
#include <cstring>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

using namespace hdt;
using testsupport::grid_search_translation;
using testsupport::interval_radical_sign;
using testsupport::random_point_set;
using testsupport::random_scalar;

namespace {

unsigned g_workers = std::max(2u, std::thread::hardware_concurrency());
std::uint64_t g_seed = 20260808;

struct Outcome {
    bool pass = true;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::string note;
};

using Bits = std::vector<std::uint8_t>;

std::vector<Bits> all_vectors(std::size_t d) {
    std::vector<Bits> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        Bits v(d);
        for (std::size_t k = 0; k < d; ++k) v[k] = (mask >> k) & 1;
        out.push_back(std::move(v));
    }
    return out;
}

bool dot_is_zero(const Bits& a, const Bits& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] && b[k]) return false;
    return true;
}

Bits complement(const Bits& v) {
    Bits out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] ? 0 : 1;
    return out;
}

Point pt_rational(const Rational& x, const Rational& y) {
    return Point(ExactScalar(x), ExactScalar(y));
}

bool gadget_pair_close(const Bits& v1, const Bits& v2, const OvReductionParams& params,
                       bool swapped) {
    PointSet left = swapped ? mirrored_vector_gadget(v1, params) : vector_gadget(v1, params);
    PointSet right = swapped ? vector_gadget(v2, params) : mirrored_vector_gadget(v2, params);
    right = translate(right, pt_rational(Rational(1), Rational(0)));
    if (params.norm.kind == Norm::Kind::Linf) {
        left = l1_to_linf(left);
        right = l1_to_linf(right);
    }
    return undirected_hausdorff(left, right, params.norm).leq_threshold(ExactScalar(1));
}

// --- shared instance pools -------------------------------------------------

std::vector<OvInstance> ov_exhaustive_pool() {
    // ordered pairs over the three nonzero vectors of {0,1}^2, both sides
    std::vector<Bits> nz{{1, 0}, {0, 1}, {1, 1}};
    std::vector<OvInstance> pool;
    for (const auto& a1 : nz)
        for (const auto& a2 : nz)
            for (const auto& b1 : nz)
                for (const auto& b2 : nz) pool.push_back(OvInstance{{a1, a2}, {b1, b2}});
    return pool;
}

std::vector<OvInstance> ov_random_pool(std::size_t count) {
    std::vector<OvInstance> pool;
    std::mt19937_64 rng(g_seed);
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t m = 1 + rng() % 3, n = 1 + rng() % 3, d = 1 + rng() % 4;
        bool planted = (k % 2 == 0) && !(d == 1);  // d=1 plants force the zero vector
        pool.push_back(gen_ov(m, n, d, planted, g_seed + 1000 + k));
    }
    return pool;
}

std::vector<Conv3SumInstance> conv3sum_pool(std::size_t random_count) {
    std::vector<Conv3SumInstance> pool;
    for (long long a = 1; a <= 4; ++a)
        for (long long b = 1; b <= 4; ++b)
            for (long long c = 1; c <= 4; ++c)
                pool.push_back(Conv3SumInstance::from_sequence({a, b, c}));
    std::mt19937_64 rng(g_seed + 77);
    for (std::size_t k = 0; k < random_count; ++k) {
        bool planted = k % 2 == 0;
        std::size_t n = planted ? 3 + rng() % 2 : 1 + rng() % 4;
        long long max_value = 2 + static_cast<long long>(rng() % 5);
        pool.push_back(gen_conv3sum(n, max_value, planted, g_seed + 5000 + k));
    }
    return pool;
}

// --- criteria ---------------------------------------------------------------

Outcome criterion_gadget_lemmas() {
    Outcome out;
    for (std::size_t d = 1; d <= 5; ++d) {
        auto vectors = all_vectors(d);
        std::vector<Norm> norms{Norm::l1(), Norm::linf(), Norm::l2(), Norm::lp(3)};
        for (const Norm& norm : norms) {
            auto params = OvReductionParams::for_norm(norm, 1, 1, d);
            for (const auto& v1 : vectors)
                for (const auto& v2 : vectors) {
                    bool close = gadget_pair_close(v1, v2, params, false);
                    ++out.checks;
                    if (close != dot_is_zero(v1, v2)) ++out.violations;

                    bool swapped_close = gadget_pair_close(v1, v2, params, true);
                    ++out.checks;
                    if (swapped_close != dot_is_zero(complement(v1), complement(v2)))
                        ++out.violations;
                }
        }
    }
    out.pass = out.violations == 0;
    return out;
}

/// Re-verifies a decision witness against a freshly built system.
bool witness_reverifies(const VerificationReport& rep, const PointSet& a, const PointSet& b,
                        const Rational& delta, const Norm& norm, Direction dir) {
    if (!rep.solver_answer) return true;
    if (!rep.witness) return false;
    auto sys = build_constraints(a, b, delta, norm, dir);
    if (!test_candidate(*rep.witness, sys)) return false;
    if (rep.witness->is_exact() &&
        !decide_at_translation(a, b, rep.witness->exact_point(), ExactScalar(delta), norm, dir))
        return false;
    return true;
}

Outcome criterion_ov_end_to_end() {
    Outcome out;
    std::vector<OvInstance> pool = ov_exhaustive_pool();
    auto random_pool = ov_random_pool(500);
    pool.insert(pool.end(), random_pool.begin(), random_pool.end());

    struct Task {
        std::size_t inst;
        Norm norm;
        Direction dir;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (const Norm& norm : {Norm::l1(), Norm::linf(), Norm::l2()})
            for (Direction dir : {Direction::Undirected, Direction::BToA})
                tasks.push_back({i, norm, dir});

    std::atomic<std::uint64_t> violations{0};
    std::mutex dump_mutex;
    parallel_for_indexed(tasks.size(), g_workers, [&](std::size_t t) {
        const Task& task = tasks[t];
        const OvInstance& inst = pool[task.inst];
        std::string id = "c2-" + std::to_string(task.inst) + "-" + task.norm.str() + "-" +
                         direction_str(task.dir);
        VerificationReport rep = verify_ov(inst, task.norm, task.dir, id);

        bool ok = rep.agreement;
        if (ok && !rep.preprocessed) {
            OvPreprocessResult pre = preprocess_ov(inst);
            ReductionOutput red = reduce_ov(pre.instance, task.norm);
            ok = ok && red.a.size() == 2 * pre.instance.m() * pre.instance.d();
            ok = ok && red.b.size() == pre.instance.n() * pre.instance.d() +
                                           2 * pre.instance.d() + 2;
            ok = ok && witness_reverifies(rep, red.a, red.b, red.delta, red.norm, task.dir);
        }
        if (!ok) {
            violations.fetch_add(1);
            std::lock_guard<std::mutex> lock(dump_mutex);
            OvPreprocessResult pre = preprocess_ov(inst);
            ReductionOutput red;
            bool geo = !pre.forced_answer.has_value();
            if (geo) red = reduce_ov(pre.instance, task.norm);
            dump_failure("failures", rep, geo ? &red : nullptr, &inst, nullptr);
        }
    });
    out.checks = tasks.size();
    out.violations = violations.load();
    out.pass = out.violations == 0;
    out.note = std::to_string(pool.size()) + " instances x 3 norms x 2 directions";
    return out;
}

Outcome criterion_conv3sum_end_to_end() {
    Outcome out;
    auto pool = conv3sum_pool(200);

    struct Task {
        std::size_t inst;
        Direction dir;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (Direction dir : {Direction::AToB, Direction::Undirected}) tasks.push_back({i, dir});

    std::atomic<std::uint64_t> violations{0};
    std::mutex dump_mutex;
    parallel_for_indexed(tasks.size(), g_workers, [&](std::size_t t) {
        const Task& task = tasks[t];
        const Conv3SumInstance& inst = pool[task.inst];
        std::string id = "c3-" + std::to_string(task.inst) + "-" + direction_str(task.dir);
        VerificationReport rep = verify_conv3sum(inst, task.dir, id);

        ReductionOutput red = reduce_conv3sum(inst);
        bool ok = rep.agreement;
        ok = ok && red.a.size() == 9 * inst.n() + 4;
        ok = ok && red.b.size() == 7;
        ok = ok && witness_reverifies(rep, red.a, red.b, red.delta, red.norm, task.dir);
        if (!ok) {
            violations.fetch_add(1);
            std::lock_guard<std::mutex> lock(dump_mutex);
            dump_failure("failures", rep, &red, nullptr, &inst);
        }
    });
    out.checks = tasks.size();
    out.violations = violations.load();
    out.pass = out.violations == 0;
    out.note = std::to_string(pool.size()) + " instances x 2 directions";
    return out;
}

Outcome criterion_stripe_suite() {
    Outcome out;
    auto pool = conv3sum_pool(200);
    std::atomic<std::uint64_t> checks{0}, violations{0};

    parallel_for_indexed(pool.size(), g_workers, [&](std::size_t idx) {
        const Conv3SumInstance& inst = pool[idx];
        auto params = Reduction3SumParams::make(inst);
        long n = static_cast<long>(params.n);
        ExactScalar box_lo{Rational(0)};
        ExactScalar box_hi{params.epsilon * Rational(2 * n - 1)};
        Rational slack = Rational(4) * Rational(n * n) * params.epsilon.pow(2);

        std::vector<Rational> stripes;
        for (long i = 0; i < n; ++i)
            stripes.push_back(params.epsilon * Rational(2 * i) +
                              params.epsilon_15 * Rational(inst.x[static_cast<std::size_t>(i)]));

        auto on_some_stripe_x = [&](const CandidateTranslation& c) {
            for (const Rational& s : stripes)
                if (c.compare_x(ExactScalar(s - slack)) >= 0 &&
                    c.compare_x(ExactScalar(s + slack)) <= 0)
                    return true;
            return false;
        };

        // Every in-box feasible candidate of the low-level system sits on
        // a stripe.
        GadgetPair low = low_level_gadget(inst, params);
        auto sys = build_constraints(low.a, low.b, params.delta, Norm::l2(), Direction::AToB);
        for (const auto& cand : generate_candidates(sys)) {
            if (cand.compare_x(box_lo) < 0 || cand.compare_x(box_hi) > 0) continue;
            if (cand.compare_y(box_lo) < 0 || cand.compare_y(box_hi) > 0) continue;
            if (!test_candidate(cand, sys)) continue;
            ++checks;
            if (!on_some_stripe_x(cand)) ++violations;
        }

        // Stripe translations are feasible across the vertical range.
        Rational ty_max = params.epsilon * Rational(2 * (n - 1));
        for (const Rational& s : stripes)
            for (int step = 0; step <= 4; ++step) {
                Rational ty = ty_max * Rational(step, 4);
                ++checks;
                if (!decide_at_translation(low.a, low.b, pt_rational(s, ty),
                                           ExactScalar(params.delta), Norm::l2(),
                                           Direction::Undirected))
                    ++violations;
            }

        // Full-instance witnesses obey the column stripe and the diagonal
        // sum constraint.
        ReductionOutput red = reduce_conv3sum(inst);
        auto dec = decide_translation(red.a, red.b, red.delta, red.norm, Direction::AToB);
        if (dec.feasible) {
            ++checks;
            if (!on_some_stripe_x(*dec.witness)) ++violations;
            // The diagonal window is +-4*sqrt(2)*n^2*eps^2 in the sum: the
            // 4 n^2 eps^2 slack lives along the gadget axis, and the pi/4
            // frame change stretches it by sqrt(2).
            ExactScalar sum_slack{Rational(0), slack};  // slack * sqrt(2)
            auto on_some_stripe_sum = [&](const CandidateTranslation& c) {
                for (const Rational& s : stripes)
                    if (c.compare_sum(ExactScalar(s) - sum_slack) >= 0 &&
                        c.compare_sum(ExactScalar(s) + sum_slack) <= 0)
                        return true;
                return false;
            };
            ++checks;
            if (!on_some_stripe_sum(*dec.witness)) ++violations;
        }
    });

    out.checks = checks.load();
    out.violations = violations.load();
    out.pass = out.violations == 0;
    return out;
}

Outcome criterion_witness_box() {
    Outcome out;
    auto pool = conv3sum_pool(200);
    std::atomic<std::uint64_t> checks{0}, violations{0};

    parallel_for_indexed(pool.size(), g_workers, [&](std::size_t idx) {
        const Conv3SumInstance& inst = pool[idx];
        auto params = Reduction3SumParams::make(inst);
        long n = static_cast<long>(params.n);
        ExactScalar box_lo{Rational(0)};
        ExactScalar box_hi{params.epsilon * Rational(2 * n - 1)};

        ReductionOutput red = reduce_conv3sum(inst);
        for (Direction dir : {Direction::AToB, Direction::Undirected}) {
            auto dec = decide_translation(red.a, red.b, red.delta, red.norm, dir);
            if (!dec.feasible) continue;
            ++checks;
            const CandidateTranslation& w = *dec.witness;
            bool inside = w.compare_x(box_lo) >= 0 && w.compare_x(box_hi) <= 0 &&
                          w.compare_y(box_lo) >= 0 && w.compare_y(box_hi) <= 0;
            if (!inside) ++violations;
        }
    });

    out.checks = checks.load();
    out.violations = violations.load();
    out.pass = out.violations == 0;
    return out;
}

Outcome criterion_solver_properties() {
    Outcome out;
    std::atomic<std::uint64_t> checks{0}, violations{0};

    // (a) witness re-verification on random instances
    std::vector<std::uint64_t> seeds_a(200);
    for (std::size_t k = 0; k < seeds_a.size(); ++k) seeds_a[k] = g_seed + 9000 + k;
    parallel_for_indexed(seeds_a.size(), g_workers, [&](std::size_t k) {
        std::mt19937_64 rng(seeds_a[k]);
        PointSet a = random_point_set(rng, 5, 2, 2), b = random_point_set(rng, 5, 2, 2);
        Norm norm = (k % 3 == 0) ? Norm::l1() : (k % 3 == 1 ? Norm::l2() : Norm::linf());
        Direction dir = (k % 3 == 0) ? Direction::AToB
                                     : (k % 3 == 1 ? Direction::BToA : Direction::Undirected);
        Rational delta(1 + static_cast<long>(rng() % 3), 2);
        auto res = decide_translation(a, b, delta, norm, dir);
        if (res.feasible) {
            ++checks;
            auto sys = build_constraints(a, b, delta, norm, dir);
            bool ok = res.witness && test_candidate(*res.witness, sys);
            if (ok && res.witness->is_exact())
                ok = decide_at_translation(a, b, res.witness->exact_point(), ExactScalar(delta),
                                           norm, dir);
            if (!ok) ++violations;
        }
    });

    // (b) dense-grid completeness: whenever the solver says infeasible, a
    // delta/50 grid over the difference bbox finds nothing either.
    std::vector<std::uint64_t> seeds_b(200);
    for (std::size_t k = 0; k < seeds_b.size(); ++k) seeds_b[k] = g_seed + 20000 + k;
    parallel_for_indexed(seeds_b.size(), g_workers, [&](std::size_t k) {
        std::mt19937_64 rng(seeds_b[k]);
        PointSet a = random_point_set(rng, 5, 1, 2), b = random_point_set(rng, 5, 1, 2);
        Norm norm = (k % 3 == 0) ? Norm::l1() : (k % 3 == 1 ? Norm::l2() : Norm::linf());
        Direction dir = (k % 3 == 0) ? Direction::AToB
                                     : (k % 3 == 1 ? Direction::BToA : Direction::Undirected);
        Rational delta(1);
        auto res = decide_translation(a, b, delta, norm, dir);
        ++checks;
        if (!res.feasible && grid_search_translation(a, b, delta, norm, dir, 50)) ++violations;
    });

    out.checks = checks.load();
    out.violations = violations.load();
    out.pass = out.violations == 0;
    return out;
}

Outcome criterion_exact_arithmetic() {
    Outcome out;
    std::mt19937_64 rng(g_seed + 31337);
    for (int it = 0; it < 10000; ++it) {
        ExactScalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        bool ok = (x + y == y + x) && (x * y == y * x) && ((x + y) + z == x + (y + z)) &&
                  ((x * y) * z == x * (y * z)) && (x * (y + z) == x * y + x * z) &&
                  (x.sign() * y.sign() == (x * y).sign());
        if (!y.is_zero()) ok = ok && (x / y) * y == x;
        ++out.checks;
        if (!ok) ++out.violations;
    }
    int decided = 0;
    for (int it = 0; it < 10000 || decided < 10000; ++it) {
        RadicalExpr e{random_scalar(rng), random_scalar(rng), random_scalar(rng).abs()};
        auto bound = interval_radical_sign(e, 256);
        if (!bound) continue;
        ++decided;
        ++out.checks;
        if (radical_sign(e) != *bound) ++out.violations;
        if (it > 200000) break;
    }
    out.pass = out.violations == 0;
    return out;
}

Outcome criterion_size_formulas() {
    Outcome out;
    std::mt19937_64 rng(g_seed + 404);
    for (int it = 0; it < 120; ++it) {
        std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4, d = 2 + rng() % 3;
        OvInstance inst = gen_ov(m, n, d, it % 2 == 0, g_seed + 800 + it);
        auto pre = preprocess_ov(inst);
        if (pre.forced_answer) continue;
        for (const Norm& norm : {Norm::l1(), Norm::linf(), Norm::l2()}) {
            ReductionOutput red = reduce_ov(pre.instance, norm);
            ++out.checks;
            if (red.a.size() != 2 * pre.instance.m() * pre.instance.d() ||
                red.b.size() !=
                    pre.instance.n() * pre.instance.d() + 2 * pre.instance.d() + 2)
                ++out.violations;
        }
    }
    for (int it = 0; it < 120; ++it) {
        std::size_t n = 1 + rng() % 5;
        long long max_value = 1 + static_cast<long long>(rng() % 8);
        Conv3SumInstance inst = gen_conv3sum(n, max_value, false, g_seed + 900 + it);
        ReductionOutput red = reduce_conv3sum(inst);
        ++out.checks;
        if (red.a.size() != 9 * n + 4 || red.b.size() != 7) ++out.violations;
    }
    out.pass = out.violations == 0;
    return out;
}

Outcome criterion_bench_smoke() {
    Outcome out;
    BenchConfig cfg;
    cfg.kind = ReductionKind::Ov;
    cfg.grid = {{2, 2}, {3, 3}, {4, 4}};
    cfg.d = 2;
    cfg.repetitions = 2;
    cfg.seed = g_seed;
    cfg.norm = Norm::l1();
    cfg.direction = Direction::Undirected;
    cfg.timeout = std::chrono::milliseconds(120000);

    BenchResult res = bench_scaling(cfg);
    std::ostringstream csv;
    write_bench_csv(csv, res.records, res.fitted_slope);
    std::istringstream back(csv.str());
    auto parsed = read_bench_csv(back);

    bool ok = !res.records.empty();
    ok = ok && parsed == res.records;
    for (const auto& r : res.records) ok = ok && !r.timed_out;
    ok = ok && res.fitted_slope.has_value() && *res.fitted_slope > 0;
    out.checks = res.records.size();
    out.violations = ok ? 0 : 1;
    out.pass = ok;
    if (res.fitted_slope) {
        std::ostringstream note;
        note << "fitted slope " << *res.fitted_slope;
        out.note = note.str();
    }
    return out;
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "vector gadget pair distance equals orthogonality (d<=5; L1, Linf, L2, Lp:3)",
     criterion_gadget_lemmas},
    {2, "OV end-to-end: solver equals oracle (exhaustive + 500 random; L1/Linf/L2; und+ba)",
     criterion_ov_end_to_end},
    {3, "Conv3SUM end-to-end: solver equals oracle (exhaustive + 200 random; ab+und)",
     criterion_conv3sum_end_to_end},
    {4, "low-level stripe structure of feasible translations", criterion_stripe_suite},
    {5, "full-instance witnesses stay in the translation box", criterion_witness_box},
    {6, "solver soundness and dense-grid completeness", criterion_solver_properties},
    {7, "exact arithmetic: ring axioms and radical signs vs 256-bit intervals",
     criterion_exact_arithmetic},
    {8, "generated instance size formulas", criterion_size_formulas},
    {9, "benchmark smoke: scaling grid, CSV round trip, positive slope", criterion_bench_smoke},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--workers") && i + 1 < argc)
            g_workers = static_cast<unsigned>(std::atoi(argv[++i]));
        else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc)
            g_seed = std::strtoull(argv[++i], nullptr, 10);
        else {
            std::cerr << "usage: hdt_acceptance [--criterion N] [--workers K] [--seed S]\n";
            return 2;
        }
    }

    int failures = 0;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome outcome = c.run();
        auto secs = std::chrono::duration_cast<std::chrono::duration<double>>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name
                  << " [" << outcome.checks << " checks, " << outcome.violations << " violations";
        if (!outcome.note.empty()) std::cout << "; " << outcome.note;
        std::cout << "; " << secs << "s]" << std::endl;
        if (!outcome.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
