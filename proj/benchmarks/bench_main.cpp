#include <random>

#include <benchmark/benchmark.h>

#include "fzd/bridge.hpp"
#include "fzd/dirac.hpp"
#include "fzd/matrix.hpp"
#include "fzd/sphere.hpp"

namespace {

fzd::Matrix random_hermitian(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    fzd::Matrix a(dim, dim);
    for (int r = 0; r < dim; r++) {
        a(r, r) = normal(rng);
        for (int c = r + 1; c < dim; c++) {
            a(r, c) = fzd::cx(normal(rng), normal(rng)) * fzd::cx(1.0 / std::sqrt(2.0));
            a(c, r) = std::conj(a(r, c));
        }
    }
    return a;
}

void bench_herm_eig(benchmark::State& state) {
    const fzd::Matrix a = random_hermitian(int(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(fzd::herm_eig(a));
}

void bench_build_dirac(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fzd::build_dirac(int(state.range(0)), +1));
}

void bench_spectrum(benchmark::State& state) {
    const fzd::DiracOp d = fzd::build_dirac(int(state.range(0)), +1);
    for (auto _ : state) benchmark::DoNotOptimize(fzd::spectrum(d, 1e-6));
}

void bench_lip_seminorm(benchmark::State& state) {
    const int n = int(state.range(0));
    const fzd::DiracOp d = fzd::build_dirac(n, +1);
    const fzd::Matrix a = random_hermitian(n + 1, 7);
    for (auto _ : state) benchmark::DoNotOptimize(fzd::lip_seminorm(d, a));
}

void bench_ld_seminorm(benchmark::State& state) {
    const int n = int(state.range(0));
    const fzd::Irrep rep = fzd::irrep(n);
    const fzd::Matrix a = random_hermitian(n + 1, 7);
    for (auto _ : state) benchmark::DoNotOptimize(fzd::ld_seminorm(rep, a));
}

void bench_berezin_map(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fzd::berezin_map(int(state.range(0))));
}

void bench_bridge_norm(benchmark::State& state) {
    const int m = int(state.range(0));
    const fzd::Bridge bridge = fzd::make_bridge(m);
    const fzd::Matrix b = random_hermitian(m + 1, 13);
    const fzd::BandLimited f = fzd::symbol_covariant(b);
    for (auto _ : state) benchmark::DoNotOptimize(fzd::bridge_norm(bridge, f, b));
}

void bench_tunnel_maps(benchmark::State& state) {
    const int m = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fzd::tunnel_maps(m, m + 4));
}

BENCHMARK(bench_herm_eig)->Arg(16)->Arg(64);
BENCHMARK(bench_build_dirac)->Arg(4)->Arg(8);
BENCHMARK(bench_spectrum)->Arg(4)->Arg(8);
BENCHMARK(bench_lip_seminorm)->Arg(2)->Arg(4);
BENCHMARK(bench_ld_seminorm)->Arg(2)->Arg(4);
BENCHMARK(bench_berezin_map)->Arg(2)->Arg(3);
BENCHMARK(bench_bridge_norm)->Arg(2)->Arg(3);
BENCHMARK(bench_tunnel_maps)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
