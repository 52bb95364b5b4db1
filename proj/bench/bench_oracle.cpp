// Serial versus OpenMP grid enumeration, the order-type search, and the
// fuzzy step on the thermostat rule base.
#include "gforge/clausifier.hpp"
#include "gforge/frb_parser.hpp"
#include "gforge/fuzzy.hpp"
#include "gforge/oracle.hpp"
#include "gforge/parser.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

using namespace gforge;

// An unsatisfiable chain p1 < p2 < ... < pn < p1 over n atoms.
GroundTheory chain(int n) {
  std::string text;
  for (int i = 1; i <= n; ++i) text += "p" + std::to_string(i) + " < p" + std::to_string(i % n + 1) + "\n";
  Signature sig;
  return ground_theory(parse_theory(text, sig));
}

void BM_GridSerial(benchmark::State& state) {
  GroundTheory t = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_grid_serial(t, 2).sat);
}

void BM_GridParallel(benchmark::State& state) {
  GroundTheory t = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_grid_parallel(t, 2).sat);
}

void BM_OrderSearch(benchmark::State& state) {
  GroundTheory t = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(t).sat);
}

void BM_ClausifyRandomChain(benchmark::State& state) {
  std::string text = "p0";
  for (int i = 1; i < state.range(0); ++i) text = "(" + text + " -> p" + std::to_string(i) + ") & q" + std::to_string(i);
  FormulaPtr f = parse_formula(text);
  for (auto _ : state) benchmark::DoNotOptimize(clausify_positive(f, 0).clauses.size());
}

void BM_FuzzyStep(benchmark::State& state) {
  FrbFile f = load_frb(GFORGE_DATA_DIR "/thermo.frb");
  FuzzyAssignment e = make_assignment(f.base, f.init);
  for (auto _ : state) {
    e = step(f.base, e);
    benchmark::DoNotOptimize(e.data());
  }
}

}  // namespace

BENCHMARK(BM_GridSerial)->DenseRange(4, 8, 2);
BENCHMARK(BM_GridParallel)->DenseRange(4, 8, 2);
BENCHMARK(BM_OrderSearch)->DenseRange(4, 8, 2);
BENCHMARK(BM_ClausifyRandomChain)->Range(8, 64);
BENCHMARK(BM_FuzzyStep);

BENCHMARK_MAIN();
