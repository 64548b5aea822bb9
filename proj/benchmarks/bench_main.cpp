#include <benchmark/benchmark.h>

#include <random>

#include "precond/catalog.hpp"
#include "precond/frames.hpp"
#include "precond/probabilistic.hpp"
#include "precond/search.hpp"

using namespace precond;

namespace {

std::vector<AxiomId> all_but(AxiomId skip) {
  std::vector<AxiomId> out;
  for (AxiomId a : kPreconditionalAxioms)
    if (a != skip) out.push_back(a);
  return out;
}

RelationalFrame random_frame(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(0.3);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t x = 0; x < m; ++x)
      if (edge(rng)) edges.emplace_back(y, x);
  return RelationalFrame("bench", names, edges, true);
}

}  // namespace

static void BM_MinimalWitness(benchmark::State& state) {
  const auto axiom = kPreconditionalAxioms[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(minimal_witness(all_but(axiom), {axiom}));
  state.SetLabel(std::string(to_string(axiom)));
}
BENCHMARK(BM_MinimalWitness)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_SearchAllPreconditionals(benchmark::State& state) {
  SearchSpec spec;
  spec.lattice = lattice_inventory()[static_cast<std::size_t>(state.range(0))];
  spec.require = {kPreconditionalAxioms.begin(), kPreconditionalAxioms.end()};
  spec.find_all = true;
  std::size_t found = 0;
  for (auto _ : state) found = find_witness(spec).witnesses.size();
  state.SetLabel(spec.lattice->name() + ": " + std::to_string(found) + " tables");
}
BENCHMARK(BM_SearchAllPreconditionals)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Fixpoints(benchmark::State& state) {
  const auto f = random_frame(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(fixpoints(f));
}
BENCHMARK(BM_Fixpoints)->DenseRange(4, 12, 2);

static void BM_FixpointsByGeneration(benchmark::State& state) {
  const auto f = random_frame(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(fixpoints_by_generation(f));
}
BENCHMARK(BM_FixpointsByGeneration)->DenseRange(4, 12, 2);

static void BM_ClassifyCatalog(benchmark::State& state) {
  const auto& entries = catalog_entries();
  for (auto _ : state)
    for (const auto& e : entries) benchmark::DoNotOptimize(classify(*e.doc.op));
}
BENCHMARK(BM_ClassifyCatalog)->Unit(benchmark::kMicrosecond);

static void BM_AxiomCheck(benchmark::State& state) {
  const auto& op = *catalog_entry("nonnormal-sasaki").doc.op;
  const auto axiom = static_cast<AxiomId>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_axiom(op, axiom));
  state.SetLabel(std::string(to_string(axiom)));
}
BENCHMARK(BM_AxiomCheck)->DenseRange(0, 6);

static void BM_ProbabilisticTable(benchmark::State& state) {
  const auto space = ConfidenceSpace::standard();
  for (auto _ : state) benchmark::DoNotOptimize(arrow_prob_table(space));
}
BENCHMARK(BM_ProbabilisticTable)->Unit(benchmark::kMillisecond);

static void BM_ProbabilisticSweep(benchmark::State& state) {
  ProbVerifyOptions o;
  o.samples = static_cast<std::uint64_t>(state.range(0));
  o.priority_triples = {standard_normality_witness()};
  const auto space = ConfidenceSpace::standard();
  for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(space, o));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ProbabilisticSweep)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
