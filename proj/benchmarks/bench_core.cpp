#include <benchmark/benchmark.h>

#include "bohr/verify.hpp"

using namespace bohr;

namespace {

SchurFunction fixture(std::uint64_t stream, SampleProfile profile, int order) {
    CounterRng rng(17, stream);
    return sample_schur(rng, profile, order);
}

void BM_series_mul(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const auto a = fixture(1, SampleProfile::SchurParams, order).series;
    const auto b = fixture(2, SampleProfile::Blaschke, order).series;
    for (auto _ : state) {
        auto c = mul(a, b);
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_series_mul)->RangeMultiplier(2)->Range(64, 512)->Complexity();

void BM_series_reciprocal(benchmark::State& state) {
    const auto den = fixture(3, SampleProfile::SchurParams, 256).series;
    auto shifted = den;
    shifted.coeff_ref(0) += 2.0; // keep the constant term well away from zero
    for (auto _ : state) {
        auto r = reciprocal(shifted);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_series_reciprocal);

void BM_sample_blaschke(benchmark::State& state) {
    std::uint64_t trial = 0;
    for (auto _ : state) {
        CounterRng rng(29, trial++);
        auto f = sample_schur(rng, SampleProfile::Blaschke, 256);
        benchmark::DoNotOptimize(f.series);
    }
}
BENCHMARK(BM_sample_blaschke);

void BM_sample_schur_params(benchmark::State& state) {
    std::uint64_t trial = 0;
    for (auto _ : state) {
        CounterRng rng(31, trial++);
        auto f = sample_schur(rng, SampleProfile::SchurParams, 256);
        benchmark::DoNotOptimize(f.series);
    }
}
BENCHMARK(BM_sample_schur_params);

void BM_refined_bohr(benchmark::State& state) {
    const auto f = fixture(5, SampleProfile::ConvexCombo, 256);
    for (auto _ : state) {
        auto v = refined_bohr(f, 0.3, Head::Modulus);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_refined_bohr);

void BM_rogosinski_grid(benchmark::State& state) {
    const auto f = fixture(6, SampleProfile::Blaschke, 256);
    for (auto _ : state) {
        double worst = 0.0;
        for (int j = 0; j < 128; ++j) {
            const Complex z = std::polar(0.3, 2.0 * M_PI * j / 128.0);
            worst = std::max(worst, rogosinski(f, z, 2, 1).upper);
        }
        benchmark::DoNotOptimize(worst);
    }
}
BENCHMARK(BM_rogosinski_grid);

void BM_solve_thm7j(benchmark::State& state) {
    for (auto _ : state) {
        auto r = solve_detailed({Theorem::Thm7J});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_solve_thm7j);

void BM_verify_trials(benchmark::State& state) {
    // End-to-end cost of a small campaign, per trial.
    for (auto _ : state) {
        auto rep = run({Theorem::Thm2}, 16, 7);
        benchmark::DoNotOptimize(rep.worst_margin);
    }
    state.SetItemsProcessed(state.iterations() * 16);
}
BENCHMARK(BM_verify_trials);

} // namespace

BENCHMARK_MAIN();
