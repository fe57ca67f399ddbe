#include <benchmark/benchmark.h>

#include <cmath>

#include "metjet/cantor.hpp"
#include "metjet/contact.hpp"
#include "metjet/gallery.hpp"
#include "metjet/jet_metrics.hpp"

using namespace metjet;

static void BM_dist_kinf(benchmark::State& state) {
    double x = 0.1234;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dist_kinf(x));
        x = x < 1.9 ? x + 1e-4 : 0.1234;
    }
}
BENCHMARK(BM_dist_kinf);

static void BM_shell_points(benchmark::State& state) {
    ShellSchedule s;
    s.samples_per_shell = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(shell_points(s, 3));
}
BENCHMARK(BM_shell_points)->Arg(256)->Arg(4096);

static void BM_quasi_distance_wave(benchmark::State& state) {
    const Germ f = make_named("fractal_wave");
    const Germ z = zero_like(f);
    ShellSchedule s;
    s.ratio = std::exp(-2.0 * 3.141592653589793);
    s.shells = 16;
    s.samples_per_shell = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(quasi_distance(f, z, s).estimate);
}
BENCHMARK(BM_quasi_distance_wave)->Arg(512)->Arg(4096);

static void BM_lipschitz_ratio_wave(benchmark::State& state) {
    const Germ f = make_named("fractal_wave");
    ShellSchedule s;
    s.ratio = std::exp(-2.0 * 3.141592653589793);
    s.shells = 16;
    s.samples_per_shell = 512;
    for (auto _ : state) benchmark::DoNotOptimize(lipschitz_ratio(f, s).estimate);
}
BENCHMARK(BM_lipschitz_ratio_wave);

static void BM_extract_contact_giseh(benchmark::State& state) {
    const Germ g = make_named("giseh");
    const ValuedMonoid m = ValuedMonoid::powers_of(1.0 / 3.0);
    for (auto _ : state) benchmark::DoNotOptimize(extract_contact(g, m).verdict);
}
BENCHMARK(BM_extract_contact_giseh);

static void BM_deep_phase(benchmark::State& state) {
    double u = 1000.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sin_of_exp(u));
        u = u < 3000.0 ? u + 1.0 : 1000.0;
    }
}
BENCHMARK(BM_deep_phase);

BENCHMARK_MAIN();
