#include <benchmark/benchmark.h>

#include <random>

#include "obb/cli/commands.hpp"
#include "obb/cli/corpus.hpp"
#include "obb/cli/problem.hpp"
#include "obb/engine.hpp"

namespace {

using namespace obb;

void run_cyclic(benchmark::State& state, Strategy strategy) {
  const cli::Problem p = cli::homogenize(cli::gen_cyclic(static_cast<int>(state.range(0))));
  EngineConfig cfg;
  cfg.ordering = p.ordering;
  cfg.strategy = strategy;
  std::size_t treated = 0;
  for (auto _ : state) {
    const EngineResult r = buchberger_with_min(p.generators, cfg);
    treated = r.stats.treated;
    benchmark::DoNotOptimize(r.basis.data());
  }
  state.counters["treated"] = static_cast<double>(treated);
}

void BM_CyclicNaive(benchmark::State& state) { run_cyclic(state, Strategy::kNaive); }
void BM_CyclicGm(benchmark::State& state) { run_cyclic(state, Strategy::kGm); }
void BM_CyclicCkr(benchmark::State& state) { run_cyclic(state, Strategy::kCkr); }

BENCHMARK(BM_CyclicNaive)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclicGm)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclicCkr)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

// Pair minimalization on the leading terms of a monomial ideal.
void BM_MinPairs(benchmark::State& state) {
  std::mt19937_64 rng(11);
  cli::MonomialParams params;
  params.max_gens = static_cast<std::size_t>(state.range(0));
  params.max_vars = 5;
  params.max_exponent = 8;
  std::vector<cli::Problem> problems;
  for (int k = 0; k < 16; ++k) problems.push_back(cli::random_monomials(rng, params));
  std::size_t theta = 0;
  for (auto _ : state) {
    for (const auto& p : problems) theta += cli::run_minpairs(p).bam.theta.size();
  }
  benchmark::DoNotOptimize(theta);
}
BENCHMARK(BM_MinPairs)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

// Full reduction of products against a cyclic-6 basis.
void BM_Reduction(benchmark::State& state) {
  const cli::Problem p = cli::homogenize(cli::gen_cyclic(6));
  EngineConfig cfg;
  cfg.ordering = p.ordering;
  const EngineResult r = buchberger_with_min(p.generators, cfg);
  ReducerSet set(p.ordering);
  for (const auto& g : r.basis) set.add(g);
  std::vector<ModuleVector> inputs;
  for (std::size_t k = 1; k < p.generators.size(); ++k) {
    inputs.push_back(p.generators[k].multiplied(p.generators[k - 1].terms()[0].term.term, 3));
  }
  for (auto _ : state) {
    for (const auto& v : inputs) benchmark::DoNotOptimize(set.reduce_primitive(v));
  }
}
BENCHMARK(BM_Reduction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
