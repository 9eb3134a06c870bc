#include <benchmark/benchmark.h>

#include "logquiver/catalog.hpp"
#include "logquiver/dt.hpp"
#include "logquiver/hbar.hpp"
#include "logquiver/scattering.hpp"

using namespace logquiver;

namespace {

ToricModel p2_point_class(long d) { return catalog("P2(1,4)", {{"d", d}}).model; }

void BM_HnRecursionStar(benchmark::State& state) {
  const long n = state.range(0);
  Quiver q(n + 1);
  for (long i = 0; i < n; ++i) q.arrows[i][n] = 1;
  std::vector<long> d(n + 1, 1);
  d[n] = 2;
  const Stability theta = default_stability(q);
  for (auto _ : state) benchmark::DoNotOptimize(hn_semistable_count(q, {d}, theta));
}
BENCHMARK(BM_HnRecursionStar)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_HnRecursionNoCache(benchmark::State& state) {
  Quiver q(4);
  for (int i = 0; i < 3; ++i) q.arrows[i][3] = 1;
  const Stability theta = default_stability(q);
  for (auto _ : state) benchmark::DoNotOptimize(hn_semistable_count(q, {{1, 1, 1, 2}}, theta, false));
}
BENCHMARK(BM_HnRecursionNoCache)->Unit(benchmark::kMillisecond);

void BM_ScatterP2(benchmark::State& state) {
  const ToricModel m = p2_point_class(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scatter_model(m));
}
BENCHMARK(BM_ScatterP2)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ScatterClassical(benchmark::State& state) {
  const ToricModel m = p2_point_class(2);
  for (auto _ : state) benchmark::DoNotOptimize(scatter_model(m, std::nullopt, false));
}
BENCHMARK(BM_ScatterClassical)->Unit(benchmark::kMillisecond);

void BM_HbarExpand(benchmark::State& state) {
  const HalfLaurent omega = HalfLaurent::monomial(1, Rational(-1)) + HalfLaurent::monomial(-1, Rational(-1));
  const int gmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hbar_expand(omega, 2, gmax));
}
BENCHMARK(BM_HbarExpand)->Arg(2)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
