#include <benchmark/benchmark.h>

#include "gallai/canonical.hpp"
#include "gallai/census.hpp"
#include "gallai/construction.hpp"
#include "gallai/decomposition.hpp"
#include "gallai/reduction.hpp"

using namespace gallai;

namespace {

// A fixed 5-vertex reduced maximal graph, the usual subject for the
// structural passes.
const ColoredMultigraph& sample_graph() {
  static const ColoredMultigraph g = [] {
    auto result = enumerate_census(5, Palette::letters(3), 2);
    return result.reduced_maximal_representatives.back();
  }();
  return g;
}

void census(benchmark::State& state) {
  auto palette = Palette::letters(3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto result = enumerate_census(n, palette, 2);
    benchmark::DoNotOptimize(result.record.gallai_labeled);
  }
}

void canonical(benchmark::State& state) {
  const auto& g = sample_graph();
  for (auto _ : state) {
    auto code = canonical_form(g);
    benchmark::DoNotOptimize(code);
  }
}

void closure(benchmark::State& state) {
  auto seed = uniform_clique(6, ColorSet::single(0), Palette::letters(3));
  for (auto _ : state) {
    auto closed = maximal_closure(seed);
    benchmark::DoNotOptimize(closed);
  }
}

void decomposition(benchmark::State& state) {
  const auto& g = sample_graph();
  for (auto _ : state) {
    auto seq = decompose(g);
    benchmark::DoNotOptimize(seq.levels);
  }
}

void realizations(benchmark::State& state) {
  auto base = MixedGraph::abstract_nodes(1, Palette::letters(3));
  auto tree = delta_t(base, ColorSet::of({0, 1}))[0];
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate_gamma_realizations(tree, static_cast<int>(state.range(0)),
                                 [&](const ColoredMultigraph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}

}  // namespace

BENCHMARK(census)->DenseRange(3, 5);
BENCHMARK(canonical);
BENCHMARK(closure);
BENCHMARK(decomposition);
BENCHMARK(realizations)->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
