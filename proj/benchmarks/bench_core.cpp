#include <benchmark/benchmark.h>

#include "logtangent/contrib.hpp"
#include "logtangent/graphs.hpp"
#include "logtangent/tables.hpp"

using namespace logtangent;

namespace {

void bm_ratfunc_arithmetic(benchmark::State& state) {
  RatFunc a = atomic_contribution(0, 1, 3);
  RatFunc b = atomic_contribution(1, 2, 2);
  for (auto _ : state) {
    RatFunc c = a * b + a / b - b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_ratfunc_arithmetic);

void bm_enumerate_classes(benchmark::State& state) {
  int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    size_t n = 0;
    for_each_graph_class(degree, [&](const LocGraph&, const mpz_class&,
                                     const CanonKey&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(bm_enumerate_classes)->Arg(4)->Arg(5);

void bm_split_evaluation(benchmark::State& state) {
  int degree = static_cast<int>(state.range(0));
  std::vector<LocGraph> graphs;
  for_each_graph_class(degree, [&](const LocGraph& g, const mpz_class&,
                                   const CanonKey&) { graphs.push_back(g); });
  for (auto _ : state) {
    SplitMemo memo;
    RatFunc sum;
    for (const auto& g : graphs) sum += contribution_split(g, memo);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(bm_split_evaluation)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_build_table(benchmark::State& state) {
  int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ContributionTable t = build_table(degree, DegreeMode::unordered);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(bm_build_table)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_build_table_two_point(benchmark::State& state) {
  int degree = static_cast<int>(state.range(0));
  EvalOptions opts;
  opts.strategy = SumStrategy::two_point;
  for (auto _ : state) {
    ContributionTable t = build_table(degree, DegreeMode::unordered, opts);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(bm_build_table_two_point)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
