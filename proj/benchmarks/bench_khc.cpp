// Scaling probes for the two homology routes and the pairing engine.
#include <benchmark/benchmark.h>

#include "khc/cube.hpp"
#include "khc/scan.hpp"
#include "khc/typed.hpp"

namespace {

void BM_scan_torus2(benchmark::State& state) {
  const khc::Diagram d = khc::gen_torus_link(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(khc::kh_reduced_scan(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_scan_torus2)->DenseRange(4, 12, 2)->Complexity();

void BM_cube_torus2(benchmark::State& state) {
  const khc::Diagram d = khc::gen_torus_link(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(khc::kh_reduced_cube(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_cube_torus2)->DenseRange(4, 12, 2)->Complexity();

void BM_scan_torus3(benchmark::State& state) {
  const khc::Diagram d = khc::gen_torus_link(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(khc::kh_reduced_scan(d));
}
BENCHMARK(BM_scan_torus3)->DenseRange(2, 6, 1);

void BM_mor_special_ladder(benchmark::State& state) {
  const khc::TypeD arc = khc::curve_to_typeD(
      khc::Curve{khc::CurveKind::Arc, khc::Slope::make(0, 1), 1, 0, 0});
  const khc::TypeD special = khc::curve_to_typeD(
      khc::Curve{khc::CurveKind::Special, khc::Slope::infinity(),
                 static_cast<int>(state.range(0)), 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(khc::mor_pair(arc, special));
}
BENCHMARK(BM_mor_special_ladder)->DenseRange(2, 12, 2);

void BM_mor_surgery(benchmark::State& state) {
  const khc::TypeD arc = khc::curve_to_typeD(
      khc::Curve{khc::CurveKind::Arc,
                 khc::Slope::make(state.range(0), 1), 1, 0, 0});
  const khc::TypeD loop = khc::curve_to_typeD(
      khc::Curve{khc::CurveKind::Rational, khc::Slope::make(0, 1), 1, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(khc::mor_pair(arc, loop));
}
BENCHMARK(BM_mor_surgery)->DenseRange(2, 10, 2);

}  // namespace

BENCHMARK_MAIN();
