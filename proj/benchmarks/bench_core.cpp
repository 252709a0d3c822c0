#include <benchmark/benchmark.h>

#include "modcorr/bipoly.hpp"
#include "modcorr/eta.hpp"
#include "modcorr/groebner.hpp"
#include "modcorr/intersect.hpp"
#include "modcorr/modpoly.hpp"
#include "modcorr/quadforms.hpp"
#include "modcorr/series.hpp"

using namespace modcorr;

namespace {

void BM_hauptmodul_series(benchmark::State& state) {
    long order = state.range(0);
    for (auto _ : state) {
        Series t = hauptmodul_series(2, order);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_hauptmodul_series)->Arg(64)->Arg(256)->Arg(1024);

void BM_series_inverse(benchmark::State& state) {
    Series t = hauptmodul_series(2, state.range(0));
    for (auto _ : state) {
        Series inv = invert_unit(t.shifted(1));
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_series_inverse)->Arg(128)->Arg(512);

void BM_psi_polynomial(benchmark::State& state) {
    long level = state.range(0), n = state.range(1);
    for (auto _ : state) {
        ModPoly p = psi_polynomial(level, n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_psi_polynomial)->Args({1, 3})->Args({3, 4})->Args({5, 3})->Args({13, 2})
    ->Unit(benchmark::kMillisecond);

void BM_hurwitz_sweep(benchmark::State& state) {
    long bound = state.range(0);
    for (auto _ : state) {
        Rat acc(0);
        for (long d = 3; d <= bound; ++d)
            if (d % 4 == 0 || d % 4 == 3) acc += hurwitz_H(d);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_hurwitz_sweep)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_intersection_formula(benchmark::State& state) {
    long long n2 = state.range(0);
    for (auto _ : state) {
        Int v = intersection_gamma0(5, 2, n2);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_intersection_formula)->Arg(3)->Arg(7)->Arg(9);

void BM_oracle_intersection(benchmark::State& state) {
    /* one full definition-based evaluation including both polynomials */
    for (auto _ : state) {
        Int v = oracle_intersection(5, 2, 3);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_oracle_intersection)->Unit(benchmark::kMillisecond);

void BM_coprime_gcd(benchmark::State& state) {
    long n1 = state.range(0), n2 = state.range(1);
    BiPoly a = bipoly_from_modpoly(phi_polynomial(1, n1));
    BiPoly b = bipoly_from_modpoly(phi_polynomial(1, n2));
    for (auto _ : state) {
        BiPoly g = bipoly_gcd(a, b);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_coprime_gcd)->Args({2, 3})->Args({5, 7})->Args({6, 8})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
