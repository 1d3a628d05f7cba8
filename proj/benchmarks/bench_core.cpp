// Microbenchmarks for the numerical hot paths: basis evaluation, kernels,
// wavefunctions, quadrature construction, plane integration, and the
// integral transform.

#include <benchmark/benchmark.h>

#include "epsics/bargmann.hpp"
#include "epsics/polyfock.hpp"
#include "epsics/quadrature.hpp"
#include "epsics/sampled_function.hpp"
#include "epsics/states.hpp"
#include "epsics/verify.hpp"

#include <complex>
#include <vector>

namespace {

using cxd = std::complex<double>;

std::vector<cxd> sample_grid() {
    std::vector<cxd> zs;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            zs.emplace_back(-1.4 + 0.4 * i, -1.4 + 0.4 * j);
    return zs;
}

void BM_basis_member(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const std::vector<cxd> zs = sample_grid();
    for (auto _ : state) {
        for (const cxd& z : zs)
            benchmark::DoNotOptimize(epsics::polyfock::phi({m, n}, z));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(zs.size()));
}
BENCHMARK(BM_basis_member)->Args({0, 8})->Args({2, 8})->Args({8, 2});

void BM_reproducing_kernel(benchmark::State& state) {
    const std::vector<cxd> zs = sample_grid();
    const cxd w{0.4, -0.2};
    for (auto _ : state) {
        for (const cxd& z : zs)
            benchmark::DoNotOptimize(
                epsics::polyfock::reproducing_kernel(3, z, w));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(zs.size()));
}
BENCHMARK(BM_reproducing_kernel);

void BM_overlap(benchmark::State& state) {
    const std::vector<cxd> zs = sample_grid();
    const cxd w{0.4, -0.2};
    for (auto _ : state) {
        for (const cxd& z : zs)
            benchmark::DoNotOptimize(
                epsics::states::overlap(z, w, 3, 0.5).value);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(zs.size()));
}
BENCHMARK(BM_overlap);

void BM_wavefunction_closed(benchmark::State& state) {
    const epsics::states::StateLabel lbl(cxd{1.0, -0.5}, 3, 0.4);
    for (auto _ : state) {
        for (double x = -4.0; x <= 4.0; x += 0.1)
            benchmark::DoNotOptimize(
                epsics::states::wavefunction_closed(x, lbl));
    }
}
BENCHMARK(BM_wavefunction_closed);

void BM_wavefunction_series(benchmark::State& state) {
    const epsics::states::StateLabel lbl(cxd{1.0, -0.5}, 3, 0.4);
    const int trunc = epsics::states::default_truncation(lbl);
    for (auto _ : state) {
        for (double x = -4.0; x <= 4.0; x += 0.1)
            benchmark::DoNotOptimize(
                epsics::states::wavefunction_series(x, lbl, trunc));
    }
}
BENCHMARK(BM_wavefunction_series);

void BM_gaussian_kernel(benchmark::State& state) {
    for (auto _ : state) {
        for (double x = -3.0; x <= 3.0; x += 0.05)
            benchmark::DoNotOptimize(
                epsics::states::mehler_kernel(0.6, x, 0.8));
    }
}
BENCHMARK(BM_gaussian_kernel);

void BM_gauss_rule_build(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(epsics::quad::gauss_hermite(order));
}
BENCHMARK(BM_gauss_rule_build)->Arg(64)->Arg(256);

void BM_plane_rule_build(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(epsics::quad::polar_rule(64, 64));
}
BENCHMARK(BM_plane_rule_build);

void BM_gram_block(benchmark::State& state) {
    const epsics::quad::QuadratureRule rule = epsics::quad::polar_rule(32, 32);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            epsics::verify::identity_matrix(1, 0.5, 4, rule));
}
BENCHMARK(BM_gram_block);

void BM_transform_grid(benchmark::State& state) {
    epsics::bargmann::TransformSpec spec;
    spec.m = 2;
    spec.eps = 0.5;
    const epsics::SampledFunction f = epsics::SampledFunction::eigenstate(3);
    const std::vector<cxd> zs = sample_grid();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            epsics::bargmann::transform_grid(spec, f, zs));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(zs.size()));
}
BENCHMARK(BM_transform_grid);

} // namespace

BENCHMARK_MAIN();
