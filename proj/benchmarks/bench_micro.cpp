#include <benchmark/benchmark.h>

#include <hdt/harness.hpp>
#include <hdt/reduction_3sum.hpp>
#include <hdt/reduction_ov.hpp>
#include <hdt/solver.hpp>

#include <random>

using namespace hdt;

namespace {

ExactScalar random_scalar(std::mt19937_64& rng) {
    return ExactScalar(Rational(static_cast<long>(rng() % 41) - 20, 1 + rng() % 8),
                       Rational(static_cast<long>(rng() % 41) - 20, 1 + rng() % 8));
}

void BM_exact_scalar_mul(benchmark::State& state) {
    std::mt19937_64 rng(1);
    ExactScalar a = random_scalar(rng), b = random_scalar(rng);
    for (auto _ : state) {
        ExactScalar c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_exact_scalar_mul);

void BM_radical_sign(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::vector<RadicalExpr> exprs;
    for (int i = 0; i < 64; ++i)
        exprs.push_back({random_scalar(rng), random_scalar(rng), random_scalar(rng).abs()});
    std::size_t i = 0;
    for (auto _ : state) {
        int s = radical_sign(exprs[i++ & 63]);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_radical_sign);

void BM_directed_hausdorff(benchmark::State& state) {
    std::mt19937_64 rng(3);
    PointSet a, b;
    auto n = static_cast<std::size_t>(state.range(0));
    for (std::size_t i = 0; i < n; ++i) {
        a.points.emplace_back(random_scalar(rng), random_scalar(rng));
        b.points.emplace_back(random_scalar(rng), random_scalar(rng));
    }
    for (auto _ : state) {
        auto r = directed_hausdorff(a, b, Norm::l2());
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_directed_hausdorff)->Range(4, 64);

void BM_decide_ov(benchmark::State& state) {
    auto s = static_cast<std::size_t>(state.range(0));
    OvInstance inst = gen_ov(s, s, 2, false, 99);
    OvPreprocessResult pre = preprocess_ov(inst);
    for (std::uint64_t bump = 1; pre.forced_answer; ++bump) {
        inst = gen_ov(s, s, 2, false, 99 + bump);
        pre = preprocess_ov(inst);
    }
    ReductionOutput red = reduce_ov(pre.instance, Norm::l1());
    for (auto _ : state) {
        auto dec = decide_translation(red.a, red.b, red.delta, red.norm, Direction::Undirected);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_decide_ov)->DenseRange(2, 4);

void BM_decide_conv3sum(benchmark::State& state) {
    auto n = static_cast<std::size_t>(state.range(0));
    Conv3SumInstance inst = gen_conv3sum(n, 6, false, 7);
    ReductionOutput red = reduce_conv3sum(inst);
    for (auto _ : state) {
        auto dec = decide_translation(red.a, red.b, red.delta, red.norm, Direction::AToB);
        benchmark::DoNotOptimize(dec);
    }
}
BENCHMARK(BM_decide_conv3sum)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
