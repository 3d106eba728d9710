#include <benchmark/benchmark.h>

#include "cw/codes.hpp"
#include "cw/cwg.hpp"
#include "cw/invariants.hpp"
#include "cw/poly.hpp"

using namespace cw;
using gf::FieldCtx;

static void BM_MinDistanceQ12(benchmark::State& state) {
  const auto& f4 = FieldCtx::get(2);
  auto c = codes::extended_qr(f4, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(codes::min_distance(c));
}
BENCHMARK(BM_MinDistanceQ12)->Unit(benchmark::kMillisecond);

static void BM_CweQ12(benchmark::State& state) {
  const auto& f4 = FieldCtx::get(2);
  auto c = codes::extended_qr(f4, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(poly::cwe(c));
}
BENCHMARK(BM_CweQ12)->Unit(benchmark::kMillisecond);

static void BM_CloseG2(benchmark::State& state) {
  const auto& f4 = FieldCtx::get(2);
  auto gens = cwg::group_generators(f4, gf::pinned_sc_basis(f4), false);
  for (auto _ : state)
    benchmark::DoNotOptimize(cwg::close_group(gens, 10000).order());
}
BENCHMARK(BM_CloseG2)->Unit(benchmark::kMillisecond);

static void BM_MolienG1(benchmark::State& state) {
  const auto& f2 = FieldCtx::get(1);
  auto g = cwg::close_group(
      cwg::group_generators(f2, gf::pinned_sc_basis(f2), false), 10000);
  for (auto _ : state)
    benchmark::DoNotOptimize(cwg::molien(g, 32).coeffs.size());
}
BENCHMARK(BM_MolienG1)->Unit(benchmark::kMillisecond);

static void BM_ExtremalSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  inv::invariant_space(FieldCtx::get(2), n, false);  // warm the basis cache
  for (auto _ : state)
    benchmark::DoNotOptimize(inv::extremal_search(n, n / 2).feasible);
}
BENCHMARK(BM_ExtremalSearch)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
