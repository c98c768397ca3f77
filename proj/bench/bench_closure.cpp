#include <benchmark/benchmark.h>
#include <omp.h>

#include "superweyl/closure.hpp"
#include "superweyl/verify.hpp"

namespace {

sw::GroupSpec spec_of(int64_t code) { return {static_cast<sw::Kind>(code / 100), static_cast<int>(code % 100)}; }

// args: group code (kind * 100 + n), parallel flag, threads
void BM_ReflectionClosure(benchmark::State& state) {
  const sw::GroupSpec s = spec_of(state.range(0));
  sw::Group g(s);
  g.build_table();
  const sw::GroupAlgebra ga(g);
  std::vector<sw::SparseVec> gens;
  for (const auto& x : sw::reflection_generators(s, 0)) gens.push_back(sw::sv_unit(g.index(x)));
  sw::ClosureOptions opt;
  opt.parallel = state.range(1) != 0;
  omp_set_num_threads(static_cast<int>(state.range(2)));
  size_t dim = 0;
  for (auto _ : state) {
    const auto r = sw::lie_closure(ga, gens, opt);
    dim = r.basis.rank();
    benchmark::DoNotOptimize(dim);
  }
  state.SetLabel(sw::spec_name(s) + (opt.parallel ? " parallel" : " serial"));
  state.counters["dim"] = static_cast<double>(dim);
}

void BM_DerivedSpan(benchmark::State& state) {
  const sw::GroupSpec s = spec_of(state.range(0));
  sw::Group g(s);
  g.build_table();
  const sw::GroupAlgebra ga(g);
  sw::ClosureOptions opt;
  opt.parallel = state.range(1) != 0;
  omp_set_num_threads(static_cast<int>(state.range(2)));
  size_t dim = 0;
  for (auto _ : state) {
    dim = sw::derived_span_full(ga, opt).basis.rank();
    benchmark::DoNotOptimize(dim);
  }
  state.SetLabel(sw::spec_name(s) + (opt.parallel ? " parallel" : " serial"));
  state.counters["dim"] = static_cast<double>(dim);
}

void closure_args(benchmark::internal::Benchmark* b) {
  const int hw = omp_get_num_procs();
  for (int64_t code : {5, 104, 204}) {  // A5, B4, D4
    b->Args({code, 0, 1});
    b->Args({code, 1, 1});
    if (hw > 1) b->Args({code, 1, hw});
  }
}

}  // namespace

BENCHMARK(BM_ReflectionClosure)->Apply(closure_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DerivedSpan)->Apply(closure_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
