#include <benchmark/benchmark.h>

#include "g1k/alexform.hpp"
#include "g1k/verify.hpp"

namespace {

using namespace g1k;

void BM_GroupRingMul(benchmark::State& state) {
  const GroupRingElem sih3 = sih_elem(ua_vec()) * sih_elem(ub_vec()) * sih_elem(uc_vec());
  for (auto _ : state) {
    benchmark::DoNotOptimize(sih3 * sih3);
  }
}
BENCHMARK(BM_GroupRingMul);

void BM_Embed(benchmark::State& state) {
  const GroupRingElem sih3 = sih_elem(ua_vec()) * sih_elem(ub_vec()) * sih_elem(uc_vec());
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed(sih3, cap));
  }
}
BENCHMARK(BM_Embed)->Arg(8)->Arg(12);

void BM_SeriesMul(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  TestRng rng(1);
  AlexFormData d = random_alexform_data(rng, std::max(cap, 6));
  const AlexSeries a = build_alexander_series(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(a.series, a.series));
  }
}
BENCHMARK(BM_SeriesMul)->Arg(8)->Arg(12);

void BM_DAbc(benchmark::State& state) {
  const SurfaceTriple t(3, -5, 7);
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(d_abc(t, cap));
  }
}
BENCHMARK(BM_DAbc)->Arg(8)->Arg(12);

void BM_DSigma(benchmark::State& state) {
  TestRng rng(7);
  const AlexFormData d = random_alexform_data(rng, 8);
  const AlexSeries a = build_alexander_series(d);
  const SurfaceTriple t(3, 1, -3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(d_sigma(a, t));
  }
}
BENCHMARK(BM_DSigma);

void BM_NormalizeRoundTrip(benchmark::State& state) {
  TestRng rng(11);
  const AlexFormData d = random_alexform_data(rng, 8);
  const AlexSeries a = build_alexander_series(d);
  const TruncSeries raw =
      mul(a.series, embed(GroupRingElem::exponential(ExpVec{Rational(1, 2), Rational(-1)}, 2), 8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize_alexander_series(raw, d.h1, d.ell));
  }
}
BENCHMARK(BM_NormalizeRoundTrip);

}  // namespace

BENCHMARK_MAIN();
