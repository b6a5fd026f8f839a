#include <benchmark/benchmark.h>

#include <random>

#include "ngmzi/fock.hpp"
#include "ngmzi/interferometry.hpp"
#include "ngmzi/ng_state.hpp"
#include "ngmzi/series.hpp"

namespace {

ngmzi::MZIScenario standard_scenario(int m, int n) {
    ngmzi::MZIScenario sc;
    sc.ng = ngmzi::NGOpParams{0.5, 0.9, m, n};
    sc.phi = 0.01;
    return sc;
}

void BM_series_exponential(benchmark::State& state) {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    ngmzi::QuadExponent e;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) e.M(i, j) = {u(rng), u(rng)};
        e.L[static_cast<std::size_t>(i)] = {u(rng), u(rng)};
    }
    const int cap = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = ngmzi::series_from_exponent(e, ngmzi::DegreeCaps{cap, cap});
        benchmark::DoNotOptimize(s.coeff(cap, cap, cap, cap));
    }
}
BENCHMARK(BM_series_exponential)->Arg(1)->Arg(3)->Arg(6);

void BM_success_probability(benchmark::State& state) {
    const auto sc = standard_scenario(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(ngmzi::success_probability(sc.ng));
}
BENCHMARK(BM_success_probability)->Args({0, 1})->Args({3, 3});

void BM_parity_closed_form(benchmark::State& state) {
    const auto sc = standard_scenario(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(1)));
    const double p_ng = ngmzi::success_probability(sc.ng);
    for (auto _ : state) benchmark::DoNotOptimize(ngmzi::parity_expectation(sc, p_ng));
}
BENCHMARK(BM_parity_closed_form)->Args({0, 1})->Args({3, 3});

void BM_wigner_eval(benchmark::State& state) {
    const ngmzi::NGOpParams p{0.5, 0.9, 1, 1};
    double q = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ngmzi::wigner_ng_unnormalized(p, q, -q));
        q += 1e-6;
    }
}
BENCHMARK(BM_wigner_eval);

void BM_parity_quadrature(benchmark::State& state) {
    const auto sc = standard_scenario(0, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            ngmzi::parity_via_quadrature(sc, static_cast<int>(state.range(0)), false));
}
BENCHMARK(BM_parity_quadrature)->Arg(60)->Arg(120);

void BM_oracle_mzi_parity(benchmark::State& state) {
    const auto sc = standard_scenario(0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(ngmzi::oracle_mzi_parity(sc));
}
BENCHMARK(BM_oracle_mzi_parity);

void BM_fock_mixer(benchmark::State& state) {
    const int cut = static_cast<int>(state.range(0));
    const auto coh = ngmzi::coherent_fock({1.4, 1.4}, cut);
    const auto svs = ngmzi::squeezed_vacuum_fock(0.5, cut);
    const auto joint = ngmzi::tensor_product(coh, svs);
    for (auto _ : state)
        benchmark::DoNotOptimize(ngmzi::beam_splitter_apply(joint, 0.5));
}
BENCHMARK(BM_fock_mixer)->Arg(40)->Arg(80);

} // namespace

BENCHMARK_MAIN();
