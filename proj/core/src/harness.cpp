#include <hdt/harness.hpp>

#include <hdt/instance_io.hpp>
#include <hdt/reduction_3sum.hpp>
#include <hdt/reduction_ov.hpp>

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hdt {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point from, Clock::time_point to) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count());
}

std::vector<std::string> read_blocks_line(std::istream& in) {
    std::vector<std::string> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            lines.emplace_back();  // keep blank separators
            continue;
        }
        auto last = raw.find_last_not_of(" \t\r");
        lines.push_back(raw.substr(first, last - first + 1));
    }
    return lines;
}

std::vector<std::vector<std::string>> split_blocks(const std::vector<std::string>& lines) {
    std::vector<std::vector<std::string>> blocks(1);
    for (const auto& line : lines) {
        if (line.empty()) {
            if (!blocks.back().empty()) blocks.emplace_back();
        } else {
            blocks.back().push_back(line);
        }
    }
    if (blocks.back().empty()) blocks.pop_back();
    return blocks;
}

}  // namespace

std::string reduction_kind_str(ReductionKind k) {
    return k == ReductionKind::Ov ? "ov" : "conv3sum";
}

OvInstance gen_ov(std::size_t m, std::size_t n, std::size_t d, bool planted,
                  std::uint64_t seed) {
    if (m == 0 || n == 0 || d == 0) throw std::invalid_argument("gen_ov: m, n, d must be >= 1");
    std::mt19937_64 rng(seed);
    auto random_vector = [&] {
        std::vector<std::uint8_t> v(d);
        for (auto& bit : v) bit = static_cast<std::uint8_t>(rng() & 1u);
        return v;
    };
    OvInstance inst;
    for (std::size_t i = 0; i < m; ++i) inst.x.push_back(random_vector());
    for (std::size_t j = 0; j < n; ++j) inst.y.push_back(random_vector());
    if (planted) {
        std::size_t i = rng() % m, j = rng() % n;
        inst.x[i] = random_vector();
        for (std::size_t k = 0; k < d; ++k)
            inst.y[j][k] = inst.x[i][k] ? 0 : static_cast<std::uint8_t>(rng() & 1u);
    }
    return inst;
}

Conv3SumInstance gen_conv3sum(std::size_t n, long long max_value, bool planted,
                              std::uint64_t seed) {
    if (n == 0 || max_value < 1)
        throw std::invalid_argument("gen_conv3sum: need n >= 1 and max >= 1");
    if (planted && (n < 3 || max_value < 2))
        throw std::invalid_argument("gen_conv3sum: planting needs n >= 3 and max >= 2");
    std::mt19937_64 rng(seed);
    auto uniform = [&](long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    Conv3SumInstance inst;
    inst.max_value = max_value;
    inst.x.resize(n);
    for (auto& v : inst.x) v = uniform(1, max_value);
    if (planted) {
        std::size_t i = static_cast<std::size_t>(uniform(1, static_cast<long long>(n) - 2));
        std::size_t j = static_cast<std::size_t>(
            uniform(1, static_cast<long long>(n) - 1 - static_cast<long long>(i)));
        if (i == j) {
            inst.x[i] = uniform(1, max_value / 2);
            inst.x[i + j] = 2 * inst.x[i];
        } else {
            inst.x[i] = uniform(1, max_value - 1);
            inst.x[j] = uniform(1, max_value - inst.x[i]);
            inst.x[i + j] = inst.x[i] + inst.x[j];
        }
    }
    inst.validate();
    return inst;
}

std::string VerificationReport::summary_line() const {
    std::ostringstream os;
    os << "case " << instance_id << " kind=" << reduction_kind_str(kind) << " norm=" << norm.str()
       << " dir=" << direction_str(direction) << " |A|=" << size_a << " |B|=" << size_b
       << " oracle=" << (oracle_answer ? "pos" : "neg")
       << " solver=" << (solver_answer ? "pos" : "neg")
       << " agree=" << (agreement ? "yes" : "NO");
    if (preprocessed) os << " preprocessed=" << (*preprocessed ? "pos" : "neg");
    os << " construct_ns=" << construct_ns << " solve_ns=" << solve_ns
       << " candidates=" << stats.candidates_generated << " tested=" << stats.candidates_tested;
    return os.str();
}

VerificationReport verify_ov(const OvInstance& inst, const Norm& norm, Direction dir,
                             std::string id, const SolveOptions& opts) {
    VerificationReport rep;
    rep.instance_id = id.empty() ? "ov" : std::move(id);
    rep.kind = ReductionKind::Ov;
    rep.norm = norm;
    rep.direction = dir;
    rep.oracle_answer = ov_brute(inst).positive;

    OvPreprocessResult pre = preprocess_ov(inst);
    if (pre.forced_answer) {
        rep.preprocessed = pre.forced_answer;
        rep.solver_answer = *pre.forced_answer;
        rep.agreement = rep.oracle_answer == rep.solver_answer;
        return rep;
    }

    auto t0 = Clock::now();
    ReductionOutput red = reduce_ov(pre.instance, norm);
    auto t1 = Clock::now();
    DecisionResult dec = decide_translation(red.a, red.b, red.delta, red.norm, dir, opts);
    auto t2 = Clock::now();

    rep.construct_ns = elapsed_ns(t0, t1);
    rep.solve_ns = elapsed_ns(t1, t2);
    rep.solver_answer = dec.feasible;
    rep.witness = std::move(dec.witness);
    rep.stats = dec.stats;
    rep.size_a = red.a.size();
    rep.size_b = red.b.size();
    rep.agreement = rep.oracle_answer == rep.solver_answer;
    return rep;
}

VerificationReport verify_conv3sum(const Conv3SumInstance& inst, Direction dir, std::string id,
                                   const SolveOptions& opts) {
    VerificationReport rep;
    rep.instance_id = id.empty() ? "conv3sum" : std::move(id);
    rep.kind = ReductionKind::Conv3Sum;
    rep.norm = Norm::l2();
    rep.direction = dir;
    rep.oracle_answer = conv3sum_brute(inst).positive;

    auto t0 = Clock::now();
    ReductionOutput red = reduce_conv3sum(inst);
    auto t1 = Clock::now();
    DecisionResult dec = decide_translation(red.a, red.b, red.delta, red.norm, dir, opts);
    auto t2 = Clock::now();

    rep.construct_ns = elapsed_ns(t0, t1);
    rep.solve_ns = elapsed_ns(t1, t2);
    rep.solver_answer = dec.feasible;
    rep.witness = std::move(dec.witness);
    rep.stats = dec.stats;
    rep.size_a = red.a.size();
    rep.size_b = red.b.size();
    rep.agreement = rep.oracle_answer == rep.solver_answer;
    return rep;
}

BenchResult bench_scaling(const BenchConfig& config) {
    BenchResult result;
    if (config.repetitions == 0) return result;

    struct Cell {
        std::size_t m, n;
        double work;  // abscissa for the fit
    };
    std::vector<Cell> cells;
    if (config.kind == ReductionKind::Ov) {
        for (auto [m, n] : config.grid)
            cells.push_back({m, n, static_cast<double>(m) * static_cast<double>(n)});
    } else {
        for (auto n : config.sizes) cells.push_back({7, n, static_cast<double>(n)});
    }

    std::vector<double> xs, ys;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const Cell& cell = cells[ci];
        std::uint64_t cell_seed = config.seed * 1000003ull + ci;

        // Benchmark instances are built answer-negative so every solve runs
        // the full candidate enumeration; positives exit early and measure
        // witness luck instead of scaling.
        PointSet a, b;
        Rational delta;
        Norm norm = config.norm;
        std::size_t d = 0;
        if (config.kind == ReductionKind::Ov) {
            if (config.d < 2)
                throw std::invalid_argument("bench_scaling: OV cells need d >= 2");
            OvInstance inst = gen_ov(cell.m, cell.n, config.d, false, cell_seed);
            for (auto* side : {&inst.x, &inst.y})
                for (auto& v : *side) {
                    v[0] = 1;  // shared support bit: no pair is orthogonal
                    v[1] = 0;  // and no vector is all-ones
                }
            OvPreprocessResult pre = preprocess_ov(inst);
            ReductionOutput red = reduce_ov(pre.instance, config.norm);
            a = std::move(red.a);
            b = std::move(red.b);
            delta = red.delta;
            norm = red.norm;
            d = config.d;
        } else {
            Conv3SumInstance inst = gen_conv3sum(cell.n, config.max_value, false, cell_seed);
            // values above max/2: any two sum beyond the range
            for (auto& v : inst.x) v = config.max_value / 2 + 1 + v % (config.max_value - config.max_value / 2);
            ReductionOutput red = reduce_conv3sum(inst);
            a = std::move(red.a);
            b = std::move(red.b);
            delta = red.delta;
            norm = red.norm;
        }

        double mean_ns = 0;
        std::size_t counted = 0;
        for (std::size_t rep = 0; rep <= config.repetitions; ++rep) {
            SolveOptions opts;
            if (config.timeout) opts.deadline = Clock::now() + *config.timeout;
            BenchRecord record;
            record.kind = reduction_kind_str(config.kind);
            record.m = cell.m;
            record.n = cell.n;
            record.d = d;
            record.norm = norm.str();
            record.direction = direction_str(config.direction);
            record.rep = rep;
            auto t0 = Clock::now();
            try {
                DecisionResult dec = decide_translation(a, b, delta, norm, config.direction, opts);
                record.wall_ns = elapsed_ns(t0, Clock::now());
                record.feasible = dec.feasible;
                record.candidates = dec.stats.candidates_generated;
                record.tested = dec.stats.candidates_tested;
            } catch (const SolverTimeout&) {
                record.wall_ns = elapsed_ns(t0, Clock::now());
                record.timed_out = true;
            }
            if (rep == 0) continue;  // warm-up discard
            result.records.push_back(record);
            if (!record.timed_out) {
                mean_ns += static_cast<double>(record.wall_ns);
                ++counted;
            }
        }
        if (counted > 0) {
            mean_ns /= static_cast<double>(counted);
            xs.push_back(std::log(cell.work));
            ys.push_back(std::log(std::max(mean_ns, 1.0)));
        }
    }

    if (xs.size() >= 3) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        auto n = static_cast<double>(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        double denom = n * sxx - sx * sx;
        if (denom != 0) result.fitted_slope = (n * sxy - sx * sy) / denom;
    }
    return result;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records,
                     std::optional<double> fitted_slope) {
    out << "kind,n,m,d,norm,direction,rep,wall_ns,candidates,tested,feasible,timed_out\n";
    for (const auto& r : records) {
        out << r.kind << ',' << r.n << ',' << r.m << ',' << r.d << ',' << r.norm << ','
            << r.direction << ',' << r.rep << ',' << r.wall_ns << ',' << r.candidates << ','
            << r.tested << ',' << (r.feasible ? 1 : 0) << ',' << (r.timed_out ? 1 : 0) << '\n';
    }
    if (fitted_slope) out << "# fitted_slope=" << *fitted_slope << "\n";
}

std::vector<BenchRecord> read_bench_csv(std::istream& in) {
    std::vector<BenchRecord> records;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (line.rfind("kind,", 0) == 0) continue;
        }
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 12) throw std::invalid_argument("bench csv: malformed row: " + line);
        BenchRecord r;
        r.kind = fields[0];
        r.n = std::stoull(fields[1]);
        r.m = std::stoull(fields[2]);
        r.d = std::stoull(fields[3]);
        r.norm = fields[4];
        r.direction = fields[5];
        r.rep = std::stoull(fields[6]);
        r.wall_ns = std::stoull(fields[7]);
        r.candidates = std::stoull(fields[8]);
        r.tested = std::stoull(fields[9]);
        r.feasible = fields[10] == "1";
        r.timed_out = fields[11] == "1";
        records.push_back(std::move(r));
    }
    return records;
}

OvInstance read_ov(std::istream& in) {
    auto blocks = split_blocks(read_blocks_line(in));
    if (blocks.size() != 2)
        throw std::invalid_argument("ov file: expected two blank-line-separated blocks");
    OvInstance inst;
    auto parse_block = [](const std::vector<std::string>& block,
                          std::vector<std::vector<std::uint8_t>>& side) {
        for (const auto& line : block) {
            std::vector<std::uint8_t> v;
            v.reserve(line.size());
            for (char c : line) {
                if (c == '0' || c == '1')
                    v.push_back(static_cast<std::uint8_t>(c - '0'));
                else if (c != ' ' && c != '\t')
                    throw std::invalid_argument("ov file: expected 0/1 strings");
            }
            side.push_back(std::move(v));
        }
    };
    parse_block(blocks[0], inst.x);
    parse_block(blocks[1], inst.y);
    inst.validate();
    return inst;
}

void write_ov(std::ostream& out, const OvInstance& inst) {
    for (const auto& v : inst.x) {
        for (auto bit : v) out << int(bit);
        out << '\n';
    }
    out << '\n';
    for (const auto& v : inst.y) {
        for (auto bit : v) out << int(bit);
        out << '\n';
    }
}

Conv3SumInstance read_sequence(std::istream& in) {
    std::vector<long long> xs;
    for (const auto& line : read_blocks_line(in)) {
        if (line.empty()) continue;
        xs.push_back(std::stoll(line));
    }
    return Conv3SumInstance::from_sequence(std::move(xs));
}

void write_sequence(std::ostream& out, const Conv3SumInstance& inst) {
    for (auto v : inst.x) out << v << '\n';
}

ThreeSumInstance read_threesum(std::istream& in) {
    auto blocks = split_blocks(read_blocks_line(in));
    if (blocks.size() != 3)
        throw std::invalid_argument("3sum file: expected three blank-line-separated blocks");
    ThreeSumInstance inst;
    auto parse = [](const std::vector<std::string>& block, std::vector<long long>& side) {
        for (const auto& line : block) side.push_back(std::stoll(line));
    };
    parse(blocks[0], inst.x);
    parse(blocks[1], inst.y);
    parse(blocks[2], inst.z);
    inst.validate();
    return inst;
}

void write_threesum(std::ostream& out, const ThreeSumInstance& inst) {
    for (auto v : inst.x) out << v << '\n';
    out << '\n';
    for (auto v : inst.y) out << v << '\n';
    out << '\n';
    for (auto v : inst.z) out << v << '\n';
}

void write_provenance_json(std::ostream& out, const ReductionOutput& red, ReductionKind kind,
                           const std::string& expected) {
    nlohmann::json j;
    j["kind"] = reduction_kind_str(kind);
    j["norm"] = red.norm.str();
    j["delta"] = red.delta.str();
    j["expected"] = expected;
    if (red.preprocessed_answer)
        j["preprocessed"] = *red.preprocessed_answer ? "pos" : "neg";
    j["A"] = red.provenance_a;
    j["B"] = red.provenance_b;
    out << j.dump(2) << "\n";
}

std::string dump_failure(const std::string& dir, const VerificationReport& report,
                         const ReductionOutput* red, const OvInstance* ov,
                         const Conv3SumInstance* c3s) {
    namespace fs = std::filesystem;
    fs::path base = fs::path(dir) / report.instance_id;
    fs::create_directories(base);

    {
        std::ofstream rep(base / "report.txt");
        rep << report.summary_line() << "\n";
        if (report.witness) rep << "witness: " << report.witness->str() << "\n";
    }
    if (red) {
        Instance geo{red->a, red->b, red->norm, ExactScalar(red->delta)};
        write_instance_file((base / "instance.txt").string(), geo);
        std::ofstream prov(base / "provenance.json");
        write_provenance_json(prov, *red, report.kind,
                              report.oracle_answer ? "pos" : "neg");
    }
    if (ov) {
        std::ofstream src(base / "source.ov");
        write_ov(src, *ov);
    }
    if (c3s) {
        std::ofstream src(base / "source.seq");
        write_sequence(src, *c3s);
    }
    return base.string();
}

void parallel_for_indexed(std::size_t count, unsigned workers,
                          const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    unsigned spawn = std::min<unsigned>(workers, static_cast<unsigned>(count));
    threads.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace hdt
