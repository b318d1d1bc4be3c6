// Serial scan against the OpenMP scan on the same searches. The first
// argument selects the execution mode: 0 serial, 1 parallel.
#include <benchmark/benchmark.h>

#include "graphlearn/classifier.hpp"
#include "graphlearn/dimensions.hpp"
#include "graphlearn/reductions.hpp"

using namespace graphlearn;

namespace {

SearchOptions mode(const benchmark::State& state) {
  return {state.range(0) == 0 ? Execution::Serial : Execution::Parallel, kDefaultCeiling};
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_VcLowerBound(benchmark::State& state) {
  const GraphSpec g = GraphSpec::m_core(2);
  for (auto _ : state) benchmark::DoNotOptimize(vc_lower_bound(g, 8, 2, 9, mode(state)));
  label(state);
}

void BM_Thresholds(benchmark::State& state) {
  const GraphSpec g = GraphSpec::rgraph();
  for (auto _ : state) benchmark::DoNotOptimize(contains_thresholds(g, 2, 3, 12, mode(state)));
  label(state);
}

void BM_InducedNd(benchmark::State& state) {
  const GraphSpec g = GraphSpec::rado();
  const Pattern p = make_pattern(PatternKind::Nd, 3);
  for (auto _ : state) benchmark::DoNotOptimize(find_induced(g, p, 64, mode(state)));
  label(state);
}

void BM_InducedMissing(benchmark::State& state) {
  const GraphSpec g = GraphSpec::clique_union(CliqueSizeRule::constant(2));
  const Pattern p = make_pattern(PatternKind::CoMd, 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_induced(g, p, 24, mode(state)));
  label(state);
}

void BM_Lemma56(benchmark::State& state) {
  const GraphSpec g = GraphSpec::rgraph();
  for (auto _ : state) benchmark::DoNotOptimize(lemma56_witness(g, 3, 16, mode(state)));
  label(state);
}

void BM_AlmostRandom(benchmark::State& state) {
  const GraphSpec g = GraphSpec::rado();
  for (auto _ : state) benchmark::DoNotOptimize(almost_random_witness(g, 4, 64, mode(state)));
  label(state);
}

void BM_AlmostRandomStaged(benchmark::State& state) {
  const GraphSpec g = GraphSpec::staged(reduction_h("0111000010"));
  for (auto _ : state) benchmark::DoNotOptimize(almost_random_witness(g, 2, 4096, mode(state)));
  label(state);
}

// No witness exists, so every branch is scanned.
void BM_VcExhausted(benchmark::State& state) {
  const GraphSpec g = GraphSpec::clique_union(CliqueSizeRule::constant(2));
  for (auto _ : state) benchmark::DoNotOptimize(vc_lower_bound(g, 3, 3, 9, mode(state)));
  label(state);
}

void BM_AlmostRandomExhausted(benchmark::State& state) {
  const GraphSpec g = GraphSpec::rgraph();
  for (auto _ : state) benchmark::DoNotOptimize(almost_random_witness(g, 2, 64, mode(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_VcLowerBound)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Thresholds)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InducedNd)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InducedMissing)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Lemma56)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlmostRandom)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VcExhausted)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlmostRandomExhausted)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlmostRandomStaged)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
