#include <benchmark/benchmark.h>

#include "eulerk/basis.hpp"
#include "eulerk/canonical.hpp"
#include "eulerk/catalog.hpp"
#include "eulerk/charfn.hpp"
#include "eulerk/hom.hpp"
#include "eulerk/k0.hpp"
#include "eulerk/parse.hpp"
#include "eulerk/poset.hpp"

namespace {

using namespace eulerk;

void BM_BuildCatalogGroup(benchmark::State& state) {
  const char* specs[] = {"C6", "D4", "Q8", "S4", "C6xC6"};
  const char* spec = specs[state.range(0)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_catalog_group(spec));
  }
  state.SetLabel(spec);
}
BENCHMARK(BM_BuildCatalogGroup)->DenseRange(0, 4);

void BM_EnumerateHoms(benchmark::State& state) {
  const std::pair<const char*, const char*> pairs[] = {
      {"C2xC2", "C2xC2"}, {"D4", "D4"}, {"C2xC2xC2", "D4"}, {"S4", "S3"}};
  const auto& [a, b] = pairs[state.range(0)];
  const FiniteGroup g = build_catalog_group(a);
  const FiniteGroup h = build_catalog_group(b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_homs(g, h));
  }
  state.SetLabel(std::string(a) + " -> " + b);
}
BENCHMARK(BM_EnumerateHoms)->DenseRange(0, 3);

// identity-fixing relabeling of the table, so every iteration presents a
// table the per-table cache has not seen
FiniteGroup relabeled(const FiniteGroup& g, uint64_t seed) {
  const int n = g.order();
  std::vector<int> to_new(n);
  for (int i = 0; i < n; ++i) to_new[i] = i;
  uint64_t x = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  for (int i = n - 1; i > 1; --i) {
    x = x * 6364136223846793005ULL + 1442695040888963407ULL;
    const int j = 1 + static_cast<int>(x % i);
    std::swap(to_new[i], to_new[j]);
  }
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<int> to_old(n);
  for (int i = 0; i < n; ++i) to_old[to_new[i]] = i;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<size_t>(i) * n + j] =
          to_new[g.mul(to_old[i], to_old[j])];
    }
  }
  return FiniteGroup::from_table(std::move(table), g.name() + "'");
}

void BM_CanonicalTable(benchmark::State& state) {
  const char* specs[] = {"D4", "Q8xC2", "C4xC2xC2", "C9xC3", "C8xC4"};
  const char* spec = specs[state.range(0)];
  const FiniteGroup g = build_catalog_group(spec);
  uint64_t seed = 1;
  for (auto _ : state) {
    state.PauseTiming();
    const FiniteGroup shuffled = relabeled(g, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(canonical_table(shuffled));
  }
  state.SetLabel(spec);
}
BENCHMARK(BM_CanonicalTable)->DenseRange(0, 4);

void BM_MobiusMatrix(benchmark::State& state) {
  const char* specs[] = {"C12", "C2xC2xC2", "S4", "C6xC6"};
  const FiniteGroup g = build_catalog_group(specs[state.range(0)]);
  for (auto _ : state) {
    const QuotientPoset poset = quotient_poset(g);
    benchmark::DoNotOptimize(mobius(poset));
  }
  state.SetLabel(specs[state.range(0)]);
}
BENCHMARK(BM_MobiusMatrix)->DenseRange(0, 3);

void BM_IndicatorOnGroup(benchmark::State& state) {
  const FiniteGroup d4 = build_catalog_group("D4");
  const FiniteGroup q8 = build_catalog_group("Q8");
  for (auto _ : state) {
    benchmark::DoNotOptimize(indicator_on_group(d4, q8));
  }
}
BENCHMARK(BM_IndicatorOnGroup);

void BM_AssembledEvaluation(benchmark::State& state) {
  const SpaceExpr expr = parse_space(
      "pushout(wedge(B(C6), B(C10)); susp(B(C4)); "
      "disjoint(B(C9xC3), B(Q8xC3), point))");
  const CharFunction chi =
      CharFunction::assembled(BasisAssignment::baez_dolan());
  for (auto _ : state) {
    benchmark::DoNotOptimize(chi(expr));
  }
}
BENCHMARK(BM_AssembledEvaluation);

void BM_K0Class(benchmark::State& state) {
  const SpaceExpr expr = parse_space(
      "pushout(B(C30); wedge(B(C12), B(C2xC2xC2)); susp(B(C6xC6)))");
  for (auto _ : state) {
    benchmark::DoNotOptimize(k0_class(expr));
  }
}
BENCHMARK(BM_K0Class);

}  // namespace

BENCHMARK_MAIN();
