// hdt: Hausdorff-distance-under-translation workbench.
//
// Subcommands: gen, reduce, decide, value, oracle, verify, bench.
// decide/oracle exit codes: 0 = feasible/yes, 1 = infeasible/no, 2 = error.

#include <hdt/harness.hpp>
#include <hdt/instance_io.hpp>
#include <hdt/reduction_3sum.hpp>
#include <hdt/reduction_ov.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

using namespace hdt;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::int64_t timeout_ms = 0;  // 0 = none

    SolveOptions solve_options() const {
        SolveOptions opts;
        if (timeout_ms > 0)
            opts.deadline =
                std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
        return opts;
    }
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

void write_witness_file(const std::string& path, const CandidateTranslation& w) {
    auto out = open_output(path);
    out << "# hdt-witness v1\n";
    if (w.is_exact()) {
        out << "kind=exact\n";
        out << "tau=" << w.exact_point().str() << "\n";
    } else {
        out << "kind=radical\n";
        out << "m=" << w.m.str() << "\n";
        out << "u=" << w.u.str() << "\n";
        out << "h2=" << w.h2.str() << "\n";
        out << "branch=" << (w.branch >= 0 ? "+1" : "-1") << "\n";
    }
    auto [ax, ay] = w.approx();
    out << "# approx " << ax << " " << ay << "\n";
}

Norm norm_from(const std::string& flag, const Instance& inst) {
    return flag.empty() ? inst.norm : Norm::parse(flag);
}

Rational delta_from(const std::string& flag, const Instance& inst) {
    if (!flag.empty()) {
        ExactScalar d = ExactScalar::parse(flag);
        if (!d.is_rational())
            throw std::invalid_argument("decision threshold must be rational");
        return d.rational_part();
    }
    if (inst.delta) {
        if (!inst.delta->is_rational())
            throw std::invalid_argument("instance delta must be rational for decisions");
        return inst.delta->rational_part();
    }
    throw std::invalid_argument("no delta: pass --delta or store delta= in the instance file");
}

int run_gen(const GlobalOpts& global, bool ov, std::size_t m, std::size_t n, std::size_t d,
            long long max_value, bool planted, const std::string& out_path) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }
    if (ov)
        write_ov(*out, gen_ov(m, n, d, planted, global.seed));
    else
        write_sequence(*out, gen_conv3sum(n, max_value, planted, global.seed));
    return 0;
}

int run_reduce_ov(const std::string& ov_path, const std::string& norm_flag,
                  const std::string& out_path, const std::string& prov_path,
                  const std::string& expected, const std::string& epsilon_flag) {
    auto in = open_input(ov_path);
    OvInstance inst = read_ov(in);
    Norm norm = Norm::parse(norm_flag);

    OvPreprocessResult pre = preprocess_ov(inst);
    if (pre.forced_answer) {
        std::cout << "preprocessed: " << (*pre.forced_answer ? "pos" : "neg") << "\n";
        if (!prov_path.empty()) {
            ReductionOutput stub;
            stub.norm = norm;
            stub.delta = Rational(1);
            stub.preprocessed_answer = pre.forced_answer;
            auto prov = open_output(prov_path);
            write_provenance_json(prov, stub, ReductionKind::Ov, expected);
        }
        return 0;
    }

    OvReductionParams params =
        epsilon_flag.empty()
            ? OvReductionParams::for_norm(norm, pre.instance.m(), pre.instance.n(),
                                          pre.instance.d())
            : OvReductionParams::with_epsilon(norm, pre.instance.m(), pre.instance.n(),
                                              pre.instance.d(),
                                              Rational::parse(epsilon_flag));
    ReductionOutput red = reduce_ov(pre.instance, params);
    Instance geo{red.a, red.b, red.norm, ExactScalar(red.delta)};
    if (out_path.empty())
        write_instance(std::cout, geo);
    else
        write_instance_file(out_path, geo);
    if (!prov_path.empty()) {
        auto prov = open_output(prov_path);
        write_provenance_json(prov, red, ReductionKind::Ov, expected);
    }
    return 0;
}

int run_reduce_conv3sum(const std::string& seq_path, const std::string& out_path,
                        const std::string& prov_path, const std::string& expected) {
    auto in = open_input(seq_path);
    Conv3SumInstance inst = read_sequence(in);
    ReductionOutput red = reduce_conv3sum(inst);
    Instance geo{red.a, red.b, red.norm, ExactScalar(red.delta)};
    if (out_path.empty())
        write_instance(std::cout, geo);
    else
        write_instance_file(out_path, geo);
    if (!prov_path.empty()) {
        auto prov = open_output(prov_path);
        write_provenance_json(prov, red, ReductionKind::Conv3Sum, expected);
    }
    return 0;
}

int run_decide(const GlobalOpts& global, const std::string& instance_path,
               const std::string& direction, const std::string& delta_flag,
               const std::string& norm_flag, const std::string& witness_path) {
    Instance inst = read_instance_file(instance_path);
    Norm norm = norm_from(norm_flag, inst);
    Rational delta = delta_from(delta_flag, inst);
    Direction dir = direction_parse(direction);

    DecisionResult res =
        decide_translation(inst.a, inst.b, delta, norm, dir, global.solve_options());
    std::cout << (res.feasible ? "feasible" : "infeasible")
              << " candidates=" << res.stats.candidates_generated
              << " tested=" << res.stats.candidates_tested << "\n";
    if (res.feasible) {
        std::cout << "witness: " << res.witness->str() << "\n";
        if (!witness_path.empty()) write_witness_file(witness_path, *res.witness);
    }
    return res.feasible ? 0 : 1;
}

int run_value(const GlobalOpts& global, const std::string& instance_path,
              const std::string& direction, const std::string& norm_flag,
              const std::string& tol_flag) {
    Instance inst = read_instance_file(instance_path);
    Norm norm = norm_from(norm_flag, inst);
    Direction dir = direction_parse(direction);
    Rational tol = Rational::parse(tol_flag);
    auto [lo, hi] = value_bisect(inst.a, inst.b, norm, dir, tol, global.solve_options());
    std::cout << "lo=" << lo.str() << " hi=" << hi.str() << " (approx " << lo.approx() << " .. "
              << hi.approx() << ")\n";
    return 0;
}

int run_oracle(const std::string& kind, const std::string& in_path) {
    auto in = open_input(in_path);
    if (kind == "ov") {
        OvAnswer ans = ov_brute(read_ov(in));
        std::cout << (ans.positive ? "yes" : "no");
        if (ans.witness) std::cout << " witness=(" << ans.witness->first << "," << ans.witness->second << ")";
        std::cout << "\n";
        return ans.positive ? 0 : 1;
    }
    if (kind == "3sum") {
        ThreeSumAnswer ans = threesum_brute(read_threesum(in));
        std::cout << (ans.positive ? "yes" : "no");
        if (ans.witness)
            std::cout << " witness=(" << (*ans.witness)[0] << "," << (*ans.witness)[1] << ","
                      << (*ans.witness)[2] << ")";
        std::cout << "\n";
        return ans.positive ? 0 : 1;
    }
    Conv3SumAnswer ans = conv3sum_brute(read_sequence(in));
    std::cout << (ans.positive ? "yes" : "no");
    if (ans.witness) std::cout << " witness=(" << ans.witness->first << "," << ans.witness->second << ")";
    std::cout << "\n";
    return ans.positive ? 0 : 1;
}

struct VerifyBatch {
    bool ov = true;
    std::string in_path;
    std::size_t m = 2, n = 2, d = 2;
    long long max_value = 6;
    std::size_t count = 0;
    double planted_frac = 0.5;
    std::string norm_flag = "l1";
    std::string direction = "und";
    std::string failures_dir = "failures";
};

int run_verify(const GlobalOpts& global, const VerifyBatch& batch) {
    Norm norm = Norm::parse(batch.norm_flag);
    Direction dir = direction_parse(batch.direction);

    std::vector<OvInstance> ov_pool;
    std::vector<Conv3SumInstance> c3s_pool;
    if (!batch.in_path.empty()) {
        auto in = open_input(batch.in_path);
        if (batch.ov)
            ov_pool.push_back(read_ov(in));
        else
            c3s_pool.push_back(read_sequence(in));
    } else {
        std::size_t count = batch.count == 0 ? 10 : batch.count;
        for (std::size_t k = 0; k < count; ++k) {
            bool planted = (static_cast<double>(k % 100) / 100.0) < batch.planted_frac;
            if (batch.ov)
                ov_pool.push_back(gen_ov(batch.m, batch.n, batch.d, planted, global.seed + k));
            else
                c3s_pool.push_back(
                    gen_conv3sum(batch.n, batch.max_value, planted && batch.n >= 3 && batch.max_value >= 2,
                                 global.seed + k));
        }
    }

    std::size_t total = batch.ov ? ov_pool.size() : c3s_pool.size();
    std::vector<VerificationReport> reports(total);
    parallel_for_indexed(total, global.workers, [&](std::size_t k) {
        std::string id = (batch.ov ? "ov-" : "conv3sum-") + std::to_string(k);
        if (batch.ov)
            reports[k] = verify_ov(ov_pool[k], norm, dir, id, global.solve_options());
        else
            reports[k] = verify_conv3sum(c3s_pool[k], dir, id, global.solve_options());
    });

    bool all_agree = true;
    for (std::size_t k = 0; k < total; ++k) {
        std::cout << reports[k].summary_line() << "\n";
        if (!reports[k].agreement && all_agree) {
            all_agree = false;
            if (batch.ov) {
                auto pre = preprocess_ov(ov_pool[k]);
                ReductionOutput red;
                bool geo = !pre.forced_answer.has_value();
                if (geo) red = reduce_ov(pre.instance, norm);
                std::string where = dump_failure(batch.failures_dir, reports[k],
                                                 geo ? &red : nullptr, &ov_pool[k], nullptr);
                std::cerr << "disagreement: artifacts dumped to " << where << "\n";
            } else {
                ReductionOutput red = reduce_conv3sum(c3s_pool[k]);
                std::string where =
                    dump_failure(batch.failures_dir, reports[k], &red, nullptr, &c3s_pool[k]);
                std::cerr << "disagreement: artifacts dumped to " << where << "\n";
            }
            break;  // abort on first disagreement
        }
    }
    std::cout << (all_agree ? "all agree" : "DISAGREEMENT") << "\n";
    return all_agree ? 0 : 1;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_grid(const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> grid;
    std::istringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        auto x = cell.find('x');
        if (x == std::string::npos) throw std::invalid_argument("grid cells look like 3x3");
        grid.emplace_back(std::stoull(cell.substr(0, x)), std::stoull(cell.substr(x + 1)));
    }
    return grid;
}

int run_bench(const GlobalOpts& global, bool ov, const std::string& grid_flag,
              const std::string& sizes_flag, std::size_t d, long long max_value, std::size_t reps,
              const std::string& norm_flag, const std::string& direction,
              const std::string& csv_path) {
    BenchConfig cfg;
    cfg.kind = ov ? ReductionKind::Ov : ReductionKind::Conv3Sum;
    if (ov) cfg.grid = parse_grid(grid_flag);
    else {
        std::istringstream in(sizes_flag);
        std::string tok;
        while (std::getline(in, tok, ',')) cfg.sizes.push_back(std::stoull(tok));
    }
    cfg.d = d;
    cfg.max_value = max_value;
    cfg.repetitions = reps;
    cfg.seed = global.seed;
    cfg.norm = Norm::parse(norm_flag);
    cfg.direction = direction_parse(direction);
    if (global.timeout_ms > 0) cfg.timeout = std::chrono::milliseconds(global.timeout_ms);

    BenchResult res = bench_scaling(cfg);
    if (csv_path.empty())
        write_bench_csv(std::cout, res.records, res.fitted_slope);
    else {
        auto out = open_output(csv_path);
        write_bench_csv(out, res.records, res.fitted_slope);
    }
    if (res.fitted_slope)
        std::cout << "fitted slope: " << *res.fitted_slope << "\n";
    else
        std::cout << "fitted slope: n/a (need >= 3 grid cells)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hausdorff distance under translation: exact solver, reductions, harness"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--seed", global.seed, "random seed");
    app.add_option("--workers", global.workers, "worker threads for batch verification");
    app.add_option("--timeout-ms", global.timeout_ms, "per-solve timeout in milliseconds");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a combinatorial instance");
    gen->require_subcommand(1);
    std::size_t gm = 2, gn = 2, gd = 2;
    long long gmax = 8;
    bool gplanted = false;
    std::string gout;
    auto* gen_ov_cmd = gen->add_subcommand("ov", "orthogonal vectors instance");
    gen_ov_cmd->add_option("--m", gm);
    gen_ov_cmd->add_option("--n", gn);
    gen_ov_cmd->add_option("--d", gd);
    gen_ov_cmd->add_flag("--planted", gplanted);
    gen_ov_cmd->add_option("--out", gout);
    auto* gen_c3s_cmd = gen->add_subcommand("conv3sum", "Conv3SUM sequence");
    gen_c3s_cmd->add_option("--n", gn);
    gen_c3s_cmd->add_option("--max", gmax);
    gen_c3s_cmd->add_flag("--planted", gplanted);
    gen_c3s_cmd->add_option("--out", gout);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "build a Hausdorff instance from a problem");
    reduce->require_subcommand(1);
    std::string rin, rnorm = "l1", rout, rprov, rexpected = "unknown", repsilon;
    auto* reduce_ov_cmd = reduce->add_subcommand("ov", "OV to Hausdorff under translation");
    reduce_ov_cmd->add_option("--ov", rin)->required();
    reduce_ov_cmd->add_option("--norm", rnorm);
    reduce_ov_cmd->add_option("--out", rout);
    reduce_ov_cmd->add_option("--provenance-out", rprov);
    reduce_ov_cmd->add_option("--expected", rexpected);
    reduce_ov_cmd->add_option("--epsilon", repsilon, "override the canonical epsilon");
    auto* reduce_c3s_cmd =
        reduce->add_subcommand("conv3sum", "Conv3SUM to L2 Hausdorff under translation");
    reduce_c3s_cmd->add_option("--seq", rin)->required();
    reduce_c3s_cmd->add_option("--out", rout);
    reduce_c3s_cmd->add_option("--provenance-out", rprov);
    reduce_c3s_cmd->add_option("--expected", rexpected);

    // decide / value
    std::string din, ddir = "und", ddelta, dnorm, dwitness, dtol = "1/1024";
    auto* decide = app.add_subcommand("decide", "exact feasibility decision");
    decide->add_option("--instance", din)->required();
    decide->add_option("--direction", ddir);
    decide->add_option("--delta", ddelta);
    decide->add_option("--norm", dnorm);
    decide->add_option("--witness-out", dwitness);
    auto* value = app.add_subcommand("value", "certified bisection bracket of the optimum");
    value->add_option("--instance", din)->required();
    value->add_option("--direction", ddir);
    value->add_option("--norm", dnorm);
    value->add_option("--tol", dtol);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force reference answers");
    oracle->require_subcommand(1);
    std::string oin;
    auto* oracle_ov = oracle->add_subcommand("ov");
    oracle_ov->add_option("--in", oin)->required();
    auto* oracle_3sum = oracle->add_subcommand("3sum");
    oracle_3sum->add_option("--in", oin)->required();
    auto* oracle_c3s = oracle->add_subcommand("conv3sum");
    oracle_c3s->add_option("--in", oin)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "reduce -> solve -> oracle agreement");
    verify->require_subcommand(1);
    VerifyBatch batch;
    auto* verify_ov_cmd = verify->add_subcommand("ov");
    verify_ov_cmd->add_option("--in", batch.in_path);
    verify_ov_cmd->add_option("--m", batch.m);
    verify_ov_cmd->add_option("--n", batch.n);
    verify_ov_cmd->add_option("--d", batch.d);
    verify_ov_cmd->add_option("--count", batch.count);
    verify_ov_cmd->add_option("--planted-frac", batch.planted_frac);
    verify_ov_cmd->add_option("--norm", batch.norm_flag);
    verify_ov_cmd->add_option("--direction", batch.direction);
    verify_ov_cmd->add_option("--failures", batch.failures_dir);
    auto* verify_c3s_cmd = verify->add_subcommand("conv3sum");
    verify_c3s_cmd->add_option("--in", batch.in_path);
    verify_c3s_cmd->add_option("--n", batch.n);
    verify_c3s_cmd->add_option("--max", batch.max_value);
    verify_c3s_cmd->add_option("--count", batch.count);
    verify_c3s_cmd->add_option("--planted-frac", batch.planted_frac);
    verify_c3s_cmd->add_option("--direction", batch.direction);
    verify_c3s_cmd->add_option("--failures", batch.failures_dir);

    // bench
    auto* bench = app.add_subcommand("bench", "scaling measurements with CSV output");
    bench->require_subcommand(1);
    std::string bgrid = "2x2,3x3,4x4", bsizes = "2,3,4", bnorm = "l1", bdir = "und", bcsv;
    std::size_t bd = 2, breps = 3;
    long long bmax = 8;
    auto* bench_ov = bench->add_subcommand("ov");
    bench_ov->add_option("--grid", bgrid, "comma-separated m x n cells, e.g. 2x2,3x3");
    bench_ov->add_option("--d", bd);
    bench_ov->add_option("--reps", breps);
    bench_ov->add_option("--norm", bnorm);
    bench_ov->add_option("--direction", bdir);
    bench_ov->add_option("--csv", bcsv);
    auto* bench_c3s = bench->add_subcommand("conv3sum");
    bench_c3s->add_option("--sizes", bsizes, "comma-separated n values");
    bench_c3s->add_option("--max", bmax);
    bench_c3s->add_option("--reps", breps);
    bench_c3s->add_option("--direction", bdir);
    bench_c3s->add_option("--csv", bcsv);

    // let global flags (--seed, --workers, --timeout-ms) appear after any
    // subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough(true);
        for (CLI::App* sub : cmd->get_subcommands({})) enable_fallthrough(sub);
    };
    for (CLI::App* sub : app.get_subcommands({})) enable_fallthrough(sub);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_ov_cmd->parsed()) return run_gen(global, true, gm, gn, gd, gmax, gplanted, gout);
        if (gen_c3s_cmd->parsed())
            return run_gen(global, false, gm, gn, gd, gmax, gplanted, gout);
        if (reduce_ov_cmd->parsed())
            return run_reduce_ov(rin, rnorm, rout, rprov, rexpected, repsilon);
        if (reduce_c3s_cmd->parsed()) return run_reduce_conv3sum(rin, rout, rprov, rexpected);
        if (decide->parsed()) return run_decide(global, din, ddir, ddelta, dnorm, dwitness);
        if (value->parsed()) return run_value(global, din, ddir, dnorm, dtol);
        if (oracle_ov->parsed()) return run_oracle("ov", oin);
        if (oracle_3sum->parsed()) return run_oracle("3sum", oin);
        if (oracle_c3s->parsed()) return run_oracle("conv3sum", oin);
        if (verify_ov_cmd->parsed()) {
            batch.ov = true;
            return run_verify(global, batch);
        }
        if (verify_c3s_cmd->parsed()) {
            batch.ov = false;
            return run_verify(global, batch);
        }
        if (bench_ov->parsed())
            return run_bench(global, true, bgrid, bsizes, bd, bmax, breps, bnorm, bdir, bcsv);
        if (bench_c3s->parsed())
            return run_bench(global, false, bgrid, bsizes, bd, bmax, breps, bnorm, bdir, bcsv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
