#include <benchmark/benchmark.h>

#include <random>

#include "symspine/constructions.hpp"
#include "symspine/homsearch.hpp"
#include "symspine/nerve.hpp"
#include "symspine/reflect.hpp"

using namespace symspine;

static void BM_act_random(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TruncSymSet X = nerve(symmetric_group(3), n);
  std::mt19937_64 rng(1);
  std::vector<std::pair<UMap, CellId>> work;
  for (int i = 0; i < 256; ++i) {
    work.emplace_back(random_umap(uniform_below(rng, n + 1), n, rng),
                      static_cast<CellId>(uniform_below(rng, static_cast<int>(X.size(n)))));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [phi, x] = work[i++ % work.size()];
    benchmark::DoNotOptimize(act(X, phi, x));
  }
}
BENCHMARK(BM_act_random)->Arg(2)->Arg(4);

static void BM_word_classifier(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(word_classifier(m, 4).total_cells());
}
BENCHMARK(BM_word_classifier)->DenseRange(1, 4);

static void BM_reflect_ladder(benchmark::State& state) {
  const TruncSymSet X = ladder_example(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(reflect(X).report.iterations);
}
BENCHMARK(BM_reflect_ladder)->DenseRange(1, 6);

static void BM_counterexample_pgrp(benchmark::State& state) {
  const Diagram D = counterexample_diagram(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(colimit_partial(D, PartialCategory::pgrp).object.size(1));
  }
}
BENCHMARK(BM_counterexample_pgrp)->Arg(2)->Arg(3)->Arg(4);

static void BM_homs_word_classifier(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const TruncSymSet F = word_classifier(m, 3);
  const TruncSymSet X = b_com(symmetric_group(3), 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_homs(F, X).size());
}
BENCHMARK(BM_homs_word_classifier)->DenseRange(0, 3);

static void BM_homs_group_nerves(benchmark::State& state) {
  const TruncSymSet X = nerve(symmetric_group(3), 3);
  const TruncSymSet Y = nerve(symmetric_group(4), 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_homs(X, Y).size());
}
BENCHMARK(BM_homs_group_nerves);
BENCHMARK_MAIN();
