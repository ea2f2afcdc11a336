// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "dioph/fixtures.hpp"
#include "dioph/parse.hpp"
#include "dioph/search.hpp"

namespace {

using dioph::Exec;

void BM_PairGraph(benchmark::State& state, Exec exec) {
  const auto polys = dioph::integer_candidates(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dioph::build_pair_graph(polys, 1, exec));
  state.counters["polys"] = static_cast<double>(polys.size());
}

void BM_Intersect(benchmark::State& state, Exec exec) {
  const auto data = dioph::extend_triple(dioph::parse_polys({"X - 1", "X + 1", "16*X^3 - 4*X"}), 1);
  for (auto _ : state) benchmark::DoNotOptimize(dioph::intersect(data, static_cast<int>(state.range(0)), exec));
}

void BM_TheoremCheck(benchmark::State& state, Exec exec) {
  const auto corpus = dioph::build_corpus(static_cast<int>(state.range(0)),
                                          {{dioph::parse_poly("X - 1"), dioph::parse_poly("X + 1")}});
  for (auto _ : state) benchmark::DoNotOptimize(dioph::theorem_check(corpus, 6, exec));
  state.counters["triples"] = static_cast<double>(corpus.triples.size());
}

}  // namespace

BENCHMARK_CAPTURE(BM_PairGraph, serial, Exec::Serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PairGraph, parallel, Exec::Parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Intersect, serial, Exec::Serial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Intersect, parallel, Exec::Parallel)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TheoremCheck, serial, Exec::Serial)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TheoremCheck, parallel, Exec::Parallel)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
