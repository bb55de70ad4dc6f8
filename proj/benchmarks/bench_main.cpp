#include <benchmark/benchmark.h>

#include "twistforge/builtins.hpp"
#include "twistforge/catalog.hpp"

using namespace twistforge;

namespace {

// (weighted sum of the six nilpotent generators)^n
void BM_PbwPower(benchmark::State& state) {
  AlgebraPtr p = poincare();
  UElement x(p, 1);
  for (int g = 0; g < 6; ++g) x += UElement::generator(p, g) * GaussianRational(g + 1);
  for (auto _ : state) {
    UElement y = UElement::unit(p, 1);
    for (int k = 0; k < state.range(0); ++k) y = y * x;
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_PbwPower)->DenseRange(2, 5);

void BM_LorentzPower(benchmark::State& state) {
  AlgebraPtr l = lorentz();
  UElement x(l, 1);
  for (int g = 0; g < l->dim(); ++g) x += UElement::generator(l, g);
  for (auto _ : state) {
    UElement y = UElement::unit(l, 1);
    for (int k = 0; k < state.range(0); ++k) y = y * x;
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_LorentzPower)->DenseRange(2, 4);

void BM_BuildTwist(benchmark::State& state, const char* id) {
  const CatalogEntry& e = find_entry(id);
  SpecializationMap m = SpecializationMap::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(build_twist(*e.twist, e.algebra, m, static_cast<int>(state.range(0))));
}
BENCHMARK_CAPTURE(BM_BuildTwist, L1, "L1")->DenseRange(3, 5);
BENCHMARK_CAPTURE(BM_BuildTwist, case14, "14")->DenseRange(3, 4);

void BM_Cocycle(benchmark::State& state, const char* id) {
  const CatalogEntry& e = find_entry(id);
  Series f = build_twist(*e.twist, e.algebra, SpecializationMap::defaults(), static_cast<int>(state.range(0))).value;
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_check(f));
}
BENCHMARK_CAPTURE(BM_Cocycle, L1, "L1")->DenseRange(3, 5);
BENCHMARK_CAPTURE(BM_Cocycle, case2, "2")->DenseRange(3, 4);
BENCHMARK_CAPTURE(BM_Cocycle, case17, "17")->DenseRange(3, 4);

void BM_CybeClassify(benchmark::State& state) {
  for (auto _ : state)
    for (const CatalogEntry& e : catalog()) benchmark::DoNotOptimize(cybe_classify(e.r));
}
BENCHMARK(BM_CybeClassify);

}  // namespace

BENCHMARK_MAIN();
