// Microbenchmarks for the hot paths: exact rational arithmetic, the closed
// Riemann-Roch formulas, spectrum enumeration, hull construction and
// splitting-type generation.

#include "specbundle/chern.hpp"
#include "specbundle/gm_family.hpp"
#include "specbundle/hn_polygon.hpp"
#include "specbundle/riemann_roch.hpp"
#include "specbundle/spectrum.hpp"
#include "specbundle/threefold.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace specbundle;

namespace {

void BM_RationalArith(benchmark::State& state) {
  Rational a(3, 7), b(-5, 11);
  for (auto _ : state) {
    Rational c = a * b + a / b - (a - b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_RationalArith);

void BM_EulerChar(benchmark::State& state) {
  ValidatedThreefold z = catalog_lookup("p3-o2");
  BundleChern e{-8, -4, 8, 4, -8, -12};
  for (auto _ : state) {
    Rational chi = euler_char_threefold(e, z);
    benchmark::DoNotOptimize(chi);
  }
}
BENCHMARK(BM_EulerChar);

void BM_NormalizeTwist(benchmark::State& state) {
  ValidatedThreefold z = catalog_lookup("p3-o2");
  BundleChern e = twist(BundleChern{-8, -4, 8, 4, -8, -12}, z,
                        Int(state.range(0)));
  for (auto _ : state) {
    NormalizationResult r = normalize(e, z);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_NormalizeTwist)->Arg(4)->Arg(64)->Arg(1024);

void BM_EnumerateSpectra(benchmark::State& state) {
  const std::int64_t r = state.range(0);
  for (auto _ : state) {
    auto list = enumerate_spectra(r, -1, SpectrumConstraints{true, false, true});
    benchmark::DoNotOptimize(list);
  }
}
BENCHMARK(BM_EnumerateSpectra)->Arg(4)->Arg(7)->Arg(10);

void BM_UpperHull(benchmark::State& state) {
  std::mt19937 rng(7);
  const Int total_rank = 64;
  std::uniform_int_distribution<int> rank(0, 64);
  std::uniform_int_distribution<int> degree(-300, 100);
  RankDegreePoint total{total_rank, 120};
  std::vector<RankDegreePoint> pts;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    RankDegreePoint p{rank(rng), degree(rng)};
    if (p.rank == 0 && p.degree > 0) p.degree = 0;
    if (p.rank == total.rank && p.degree > total.degree) p.degree = total.degree;
    pts.push_back(p);
  }
  for (auto _ : state) {
    HNPolygon hull = hnp_from_points(pts, total);
    benchmark::DoNotOptimize(hull);
  }
}
BENCHMARK(BM_UpperHull)->Arg(16)->Arg(128)->Arg(1024);

void BM_SplittingTypes(benchmark::State& state) {
  const std::int64_t rank = state.range(0);
  for (auto _ : state) {
    auto types = splitting_types_rational(rank, 2);
    benchmark::DoNotOptimize(types);
  }
}
BENCHMARK(BM_SplittingTypes)->Arg(3)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
