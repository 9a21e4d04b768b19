#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "softtop/algebra.hpp"
#include "softtop/corpus.hpp"
#include "softtop/miner.hpp"
#include "softtop/separation.hpp"
#include "softtop/topology.hpp"

namespace {

using namespace softtop;

ContextPtr context(std::size_t n, std::size_t m) {
  return Context::make(default_point_labels(n), default_parameter_labels(m));
}

EnumerationCaps roomy() {
  EnumerationCaps caps;
  caps.max_domain = 512;
  caps.max_family = 16;
  return caps;
}

void BM_EnumerateSoftSets(benchmark::State& state) {
  const auto ctx = context(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_soft_sets(ctx, roomy()));
}
BENCHMARK(BM_EnumerateSoftSets)->DenseRange(2, 4);

void BM_EnumerateTopologies(benchmark::State& state) {
  const auto ctx = context(2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_topologies(ctx, Flavor::kCS, 16, roomy()));
  }
}
BENCHMARK(BM_EnumerateTopologies)->Unit(benchmark::kMillisecond);

void BM_ElementaryIntersectionPairs(benchmark::State& state) {
  const auto ctx = context(3, 2);
  const auto sets = enumerate_soft_sets(ctx, roomy());
  for (auto _ : state) {
    for (const auto& f : sets) {
      for (const auto& g : sets) benchmark::DoNotOptimize(elementary_intersection(f, g));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sets.size() * sets.size()));
}
BENCHMARK(BM_ElementaryIntersectionPairs);

void BM_ValidateAll(benchmark::State& state) {
  const auto ctx = context(2, 2);
  const auto topologies = enumerate_topologies(ctx, Flavor::kCS, 16, roomy());
  for (auto _ : state) {
    for (const auto& t : topologies) {
      benchmark::DoNotOptimize(validate(ctx, t.opens(), Flavor::kCS));
    }
  }
}
BENCHMARK(BM_ValidateAll);

void BM_ClosureAllSets(benchmark::State& state) {
  const auto ctx = context(3, 2);
  const auto sets = enumerate_soft_sets(ctx, roomy());
  const auto topologies = enumerate_topologies(ctx, Flavor::kCS, 4, roomy());
  const auto& t = topologies.back();
  for (auto _ : state) {
    for (const auto& f : sets) benchmark::DoNotOptimize(closure(t, f));
  }
}
BENCHMARK(BM_ClosureAllSets);

void BM_SeparationAxioms(benchmark::State& state) {
  const auto ctx = context(2, 2);
  const auto topologies = enumerate_topologies(ctx, Flavor::kCS, 16, roomy());
  for (auto _ : state) {
    for (const auto& t : topologies) {
      benchmark::DoNotOptimize(is_regular(t));
      benchmark::DoNotOptimize(is_normal(t));
    }
  }
}
BENCHMARK(BM_SeparationAxioms)->Unit(benchmark::kMillisecond);

void BM_MinerGoal(benchmark::State& state, Predicate pos, Predicate neg, std::size_t n,
                  std::size_t m) {
  MinerGoal goal;
  goal.positive = pos;
  goal.negative = neg;
  goal.n = n;
  goal.m = m;
  goal.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(search(goal, EnumerationCaps{}));
}
BENCHMARK_CAPTURE(BM_MinerGoal, cs_not_pointwise, Predicate::kCsValid, Predicate::kSnValid, 3, 2)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinerGoal, regular_not_cond68, Predicate::kRegular, Predicate::kCond68, 2, 2)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinerGoal, normal_not_cond611, Predicate::kNormal, Predicate::kCond611, 2,
                  2)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinerGoal, closed_preimage_not_pointwise, Predicate::kContClosedPreimage,
                  Predicate::kContPointwise, 2, 2)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinerGoal, t1_not_t2_exhaustive, Predicate::kT1, Predicate::kT2, 2, 2)
    ->Unit(benchmark::kMillisecond);

void BM_Corpus(benchmark::State& state) {
  const auto catalog = load_catalog(SOFTTOP_FIXTURE_DIR);
  for (auto _ : state) benchmark::DoNotOptimize(verify_corpus(catalog));
}
BENCHMARK(BM_Corpus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
