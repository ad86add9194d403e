// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <cmath>

#include "ostrowski/sweep.hpp"

using namespace ostrowski;

namespace {

const FunctionSpec& target() { return builtin_spec("power_b"); }

void BM_Membership(benchmark::State& state) {
    const FunctionSpec& f = target();
    const auto g = f.abs_deriv_power(2.0);
    const auto kind = ConvexityKind::alpha_m_geom_convex(0.5, 0.5);
    GridSpec grid;
    grid.points_per_axis = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_membership(g, f.domain, kind, grid));
    }
}

void BM_MembershipSerial(benchmark::State& state) {
    const FunctionSpec& f = target();
    const auto g = f.abs_deriv_power(2.0);
    const auto kind = ConvexityKind::alpha_m_geom_convex(0.5, 0.5);
    GridSpec grid;
    grid.points_per_axis = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::check_membership_serial(g, f.domain, kind, grid));
    }
}

void BM_GmLemma(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_gm_lemma(static_cast<int>(state.range(0))));
    }
}

void BM_GmLemmaSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::sweep_gm_lemma_serial(static_cast<int>(state.range(0))));
    }
}

void BM_PowerLemma(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_power_lemma(static_cast<int>(state.range(0))));
    }
}

void BM_PowerLemmaSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::sweep_power_lemma_serial(static_cast<int>(state.range(0))));
    }
}

SweepConfig bench_config() {
    SweepConfig cfg;
    cfg.function_ids = {"power_a", "exp_b"};
    return cfg;
}

void BM_Sweep(benchmark::State& state) {
    const SweepConfig cfg = bench_config();
    const CorpusRegistry reg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep(cfg, reg));
    }
}

void BM_SweepSerial(benchmark::State& state) {
    const SweepConfig cfg = bench_config();
    const CorpusRegistry reg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::run_sweep_serial(cfg, reg));
    }
}

}  // namespace

BENCHMARK(BM_Membership)->Arg(41)->Arg(81)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MembershipSerial)->Arg(41)->Arg(81)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GmLemma)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GmLemmaSerial)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerLemma)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerLemmaSerial)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
