#include <benchmark/benchmark.h>

#include "msc2/census.hpp"

using namespace msc2;

static void BM_residuals_rational(benchmark::State& state) {
  Rational f;
  auto a = *parse_msc(f, "1/2,0,0,1;0,-1/2,1/2,0");
  for (auto _ : state) benchmark::DoNotOptimize(jordan_residuals(f, a));
}
BENCHMARK(BM_residuals_rational);

static void BM_residuals_gf101(benchmark::State& state) {
  PrimeField f(101);
  auto a = *parse_msc(f, "34,0,0,0;1,68,67,0");
  for (auto _ : state) benchmark::DoNotOptimize(jordan_residuals(f, a));
}
BENCHMARK(BM_residuals_gf101);

static void BM_jordan_direct_rational(benchmark::State& state) {
  Rational f;
  auto a = *parse_msc(f, "1/2,0,0,1;0,-1/2,1/2,0");
  for (auto _ : state) benchmark::DoNotOptimize(jordan_direct(f, a));
}
BENCHMARK(BM_jordan_direct_rational);

static void BM_basis_change_rational(benchmark::State& state) {
  Rational f;
  auto a = *parse_msc(f, "1/2,0,0,1;0,-1/2,1/2,0");
  Mat2<Rational> g = {f.from_int(2), f.one(), f.from_ratio(1, 3), f.one()};
  for (auto _ : state) benchmark::DoNotOptimize(basis_change(f, a, g));
}
BENCHMARK(BM_basis_change_rational);

static void BM_orbit_gf3(benchmark::State& state) {
  PrimeField f(3);
  auto a = *parse_msc(f, "0,1,1,0;1,0,0,1");
  for (auto _ : state) benchmark::DoNotOptimize(orbit_codes(f, a));
}
BENCHMARK(BM_orbit_gf3);

static void BM_iso_exhaustive_gf7(benchmark::State& state) {
  PrimeField f(7);
  auto a = instantiate(f, *find_entry("J1"), {});
  auto b = instantiate(f, *find_entry("J2"), {});
  for (auto _ : state) benchmark::DoNotOptimize(iso_exhaustive(f, a, b, 1));
}
BENCHMARK(BM_iso_exhaustive_gf7);

static void BM_census_gf2(benchmark::State& state) {
  PrimeField f(2);
  for (auto _ : state) {
    CensusReport r = census(f, {});
    benchmark::DoNotOptimize(r.member_count);
  }
}
BENCHMARK(BM_census_gf2);

BENCHMARK_MAIN();
