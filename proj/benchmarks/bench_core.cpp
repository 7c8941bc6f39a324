#include <benchmark/benchmark.h>

#include "symdisc/hermite.hpp"
#include "symdisc/montecarlo.hpp"
#include "symdisc/nearest.hpp"
#include "symdisc/quadrature.hpp"
#include "symdisc/random.hpp"
#include "symdisc/strata.hpp"
#include "symdisc/symmetric_matrix.hpp"

namespace {

using namespace symdisc;

void BM_Eigendecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(1);
  const auto a = goe_sample(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigendecompose(a));
  }
}
BENCHMARK(BM_Eigendecompose)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_GoeSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(goe_sample(n, rng));
  }
}
BENCHMARK(BM_GoeSample)->Arg(4)->Arg(16);

void BM_SecondMomentPoly(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(second_moment_poly(k));
  }
}
BENCHMARK(BM_SecondMomentPoly)->Arg(4)->Arg(12)->Arg(24);

void BM_GaussHermite(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_hermite(m));
  }
}
BENCHMARK(BM_GaussHermite)->Arg(8)->Arg(32)->Arg(64);

void BM_NearestPoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(3);
  SymmetricMatrix a(n);
  do {
    a = goe_sample(n, rng);
  } while (min_gap(a) < 1e-3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nearest_in_discriminant(a));
  }
}
BENCHMARK(BM_NearestPoint)->Arg(4)->Arg(8);

void BM_CharPoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(4);
  const auto a = goe_sample(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(char_poly(a));
  }
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8);

void BM_PartitionEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto w = MultiplicityVector::one_pair(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_partitions_of_type(w));
  }
}
BENCHMARK(BM_PartitionEnumeration)->Arg(6)->Arg(9);

void BM_PlaneTrial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_plane_count(n, 1, seed++));
  }
}
BENCHMARK(BM_PlaneTrial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
