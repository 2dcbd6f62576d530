#pragma once

#include <hdt/oracles.hpp>
#include <hdt/reduction_output.hpp>
#include <hdt/solver.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hdt {

enum class ReductionKind { Ov, Conv3Sum };

std::string reduction_kind_str(ReductionKind k);

/// Uniform random OV instance; when planted, one (x, y) pair is overwritten
/// with disjoint supports. Deterministic under seed.
OvInstance gen_ov(std::size_t m, std::size_t n, std::size_t d, bool planted, std::uint64_t seed);

/// Uniform random Conv3SUM sequence in [1, max_value]; when planted, a
/// random solution x_i + x_j = x_{i+j} with i, j >= 1 is installed
/// (requires n >= 3 and max_value >= 2). Deterministic under seed.
Conv3SumInstance gen_conv3sum(std::size_t n, long long max_value, bool planted,
                              std::uint64_t seed);

struct VerificationReport {
    std::string instance_id;
    ReductionKind kind = ReductionKind::Ov;
    Norm norm;
    Direction direction = Direction::Undirected;
    bool oracle_answer = false;
    bool solver_answer = false;
    bool agreement = false;
    std::optional<bool> preprocessed;  // forced answer, when geometry was skipped
    std::optional<CandidateTranslation> witness;
    std::uint64_t construct_ns = 0;
    std::uint64_t solve_ns = 0;
    SolveStats stats;
    std::size_t size_a = 0, size_b = 0;

    std::string summary_line() const;
};

/// reduce -> decide -> oracle, with the agreement flag filled in. OV
/// preprocessing short-circuits forced instances before any geometry.
VerificationReport verify_ov(const OvInstance& inst, const Norm& norm, Direction dir,
                             std::string id = {}, const SolveOptions& opts = {});
VerificationReport verify_conv3sum(const Conv3SumInstance& inst, Direction dir,
                                   std::string id = {}, const SolveOptions& opts = {});

struct BenchRecord {
    std::string kind;
    std::size_t n = 0, m = 0, d = 0;
    std::string norm;
    std::string direction;
    std::size_t rep = 0;
    std::uint64_t wall_ns = 0;
    std::uint64_t candidates = 0, tested = 0;
    bool feasible = false;
    bool timed_out = false;

    bool operator==(const BenchRecord&) const = default;
};

struct BenchConfig {
    ReductionKind kind = ReductionKind::Ov;
    std::vector<std::pair<std::size_t, std::size_t>> grid;  // (m, n) cells for OV
    std::vector<std::size_t> sizes;                         // n cells for Conv3SUM
    std::size_t d = 2;              // OV dimension
    long long max_value = 8;        // Conv3SUM M
    std::size_t repetitions = 3;    // recorded runs per cell (one warm-up discarded)
    std::uint64_t seed = 0;
    Norm norm = Norm::l1();
    Direction direction = Direction::Undirected;
    std::optional<std::chrono::milliseconds> timeout;  // per solve
};

struct BenchResult {
    std::vector<BenchRecord> records;
    /// Least-squares slope of log(mean wall time) vs log(instance work
    /// measure); present only with >= 3 usable grid cells.
    std::optional<double> fitted_slope;
};

BenchResult bench_scaling(const BenchConfig& config);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records,
                     std::optional<double> fitted_slope = {});
std::vector<BenchRecord> read_bench_csv(std::istream& in);

// Combinatorial instance text formats: OV files are lines of 0/1 strings
// with a blank line between X and Y; Conv3SUM files are one positive
// integer per line; 3SUM files are three blank-line-separated blocks of
// integers.
OvInstance read_ov(std::istream& in);
void write_ov(std::ostream& out, const OvInstance& inst);
Conv3SumInstance read_sequence(std::istream& in);
void write_sequence(std::ostream& out, const Conv3SumInstance& inst);
ThreeSumInstance read_threesum(std::istream& in);
void write_threesum(std::ostream& out, const ThreeSumInstance& inst);

/// JSON provenance map for a reduction output ("expected" is a passthrough
/// tag: pos, neg or unknown).
void write_provenance_json(std::ostream& out, const ReductionOutput& red, ReductionKind kind,
                           const std::string& expected);

/// Writes instance + provenance + report into dir/<id>/ for offline
/// debugging; returns the directory written.
std::string dump_failure(const std::string& dir, const VerificationReport& report,
                         const ReductionOutput* red, const OvInstance* ov,
                         const Conv3SumInstance* c3s);

/// Runs fn(0..count-1) on `workers` threads; the caller indexes results, so
/// output order never depends on scheduling.
void parallel_for_indexed(std::size_t count, unsigned workers,
                          const std::function<void(std::size_t)>& fn);

}  // namespace hdt
