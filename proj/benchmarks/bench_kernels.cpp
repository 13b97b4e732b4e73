#include <benchmark/benchmark.h>

#include <axikernel/bessel.hpp>
#include <axikernel/kernel.hpp>
#include <axikernel/norms.hpp>

using namespace axikernel;

namespace {

void BM_bessel_i1_scaled_series(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_i1_scaled(x));
        x = x < 15.0 ? x + 0.37 : 0.1;
    }
}
BENCHMARK(BM_bessel_i1_scaled_series);

void BM_bessel_i1_scaled_asymptotic(benchmark::State& state) {
    double x = 17.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_i1_scaled(x));
        x = x < 1e6 ? x * 1.618 : 17.0;
    }
}
BENCHMARK(BM_bessel_i1_scaled_asymptotic);

void BM_heat_kernel(benchmark::State& state) {
    double t = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(heat_kernel({t, 1.0, 1.3, 0.4}));
        t = t < 100.0 ? t * 1.37 : 0.01;
    }
}
BENCHMARK(BM_heat_kernel);

void BM_green_function_time_integral(benchmark::State& state) {
    const QuadratureSpec spec;
    for (auto _ : state)
        benchmark::DoNotOptimize(green_function(1.0, 1.3, 0.4, spec));
}
BENCHMARK(BM_green_function_time_integral);

void BM_green_function_near_diagonal(benchmark::State& state) {
    const QuadratureSpec spec;
    for (auto _ : state)
        benchmark::DoNotOptimize(green_function(1.0, 1.0 + 1e-6, 0.0, spec));
}
BENCHMARK(BM_green_function_near_diagonal);

void BM_green_function_closed(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(green_function_closed(1.0, 1.3, 0.4));
}
BENCHMARK(BM_green_function_closed);

void BM_green_function_dz_closed(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(green_function_dz_closed(1.0, 1.3, 0.4));
}
BENCHMARK(BM_green_function_dz_closed);

void BM_norm_lp(benchmark::State& state) {
    QuadratureSpec spec;
    spec.rel_tol = 1e-4;
    spec.abs_tol = 1e-9;
    for (auto _ : state)
        benchmark::DoNotOptimize(norm_lp_inverse_rho(1.0, 1.5, spec));
}
BENCHMARK(BM_norm_lp)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
