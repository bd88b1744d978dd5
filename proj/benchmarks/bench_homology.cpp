#include <benchmark/benchmark.h>

#include "khovanov/analysis.hpp"
#include "khovanov/homology.hpp"
#include "khovanov/invariants.hpp"
#include "khovanov/khcomplex.hpp"
#include "khovanov/knotio.hpp"

namespace {

const kh::KnotRecord& record(const std::string& name) {
  static const auto table = kh::load_knot_table(std::string(KHOVANOV_DATA_DIR) + "/census10.jsonl");
  for (const auto& r : table) {
    if (r.name == name) return r;
  }
  throw std::out_of_range(name);
}

const char* const kKnots[] = {"3_1", "7_4", "8_19", "9_42", "10_124"};

void BM_BuildCube(benchmark::State& state) {
  const kh::Diagram d = kh::diagram_of(record(kKnots[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(kh::build_cube(d, kh::CoefficientRing::rationals()));
  state.SetLabel(kKnots[state.range(0)]);
}
BENCHMARK(BM_BuildCube)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_RanksQ(benchmark::State& state) {
  const kh::Diagram d = kh::diagram_of(record(kKnots[state.range(0)]));
  const auto c = kh::build_cube(d, kh::CoefficientRing::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(kh::homology_ranks(c));
  state.SetLabel(kKnots[state.range(0)]);
}
BENCHMARK(BM_RanksQ)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_RanksZ(benchmark::State& state) {
  const kh::Diagram d = kh::diagram_of(record("8_19"));
  const auto c = kh::build_cube(d, kh::CoefficientRing::integers());
  for (auto _ : state) benchmark::DoNotOptimize(kh::homology_ranks(c));
}
BENCHMARK(BM_RanksZ)->Unit(benchmark::kMillisecond);

void BM_Minimize(benchmark::State& state) {
  const kh::Diagram d = kh::diagram_of(record(kKnots[state.range(0)]));
  const auto m = kh::build_module_complex(d);
  for (auto _ : state) benchmark::DoNotOptimize(kh::minimize_module_complex(m));
  state.SetLabel(kKnots[state.range(0)]);
}
BENCHMARK(BM_Minimize)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Bracket(benchmark::State& state) {
  const kh::Diagram d = kh::diagram_of(record("10_124"));
  for (auto _ : state) benchmark::DoNotOptimize(kh::bracket_jones(d));
}
BENCHMARK(BM_Bracket)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const auto& r = record("9_42");
  for (auto _ : state) benchmark::DoNotOptimize(kh::classify(r));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
