#include <benchmark/benchmark.h>

#include "delpezzo/catalog.hpp"
#include "delpezzo/curves.hpp"
#include "delpezzo/lct.hpp"

namespace {

using namespace delpezzo;

PairConfig plane_branch_config(long long d, Branch b) {
  SurfaceModel s = SurfaceModel::blowup_of_p2(0);
  PairConfig cfg;
  cfg.surface = s;
  cfg.curves = {WeightedCurve{"C", DivisorClass(s, {d}), CoeffForm::scaled(1), false}};
  cfg.points = {DeclaredPoint{"p", {PointBranch{0, std::move(b)}}, {}}};
  return cfg;
}

void bm_enumerate_lines(benchmark::State& state) {
  SurfaceModel s = SurfaceModel::blowup_of_p2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lines(s));
}
BENCHMARK(bm_enumerate_lines)->Arg(6)->Arg(8);

void bm_resolution(benchmark::State& state) {
  PairConfig cfg = plane_branch_config(7, quasi_homogeneous_branch(5, 7));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_log_resolution(cfg));
}
BENCHMARK(bm_resolution);

void bm_lct_dynamic(benchmark::State& state) {
  PairConfig cfg = plane_branch_config(7, quasi_homogeneous_branch(4, 7));
  for (auto _ : state) benchmark::DoNotOptimize(lct_dynamic(cfg));
}
BENCHMARK(bm_lct_dynamic);

void bm_piecewise_fold(benchmark::State& state) {
  std::vector<PiecewiseFL> pool;
  for (const auto& row : alpha_table()) pool.push_back(row.stated);
  for (auto _ : state) {
    PiecewiseFL acc = PiecewiseFL::constant(1);
    for (const auto& f : pool) acc = piecewise_min(acc, f);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(bm_piecewise_fold);

void bm_check_catalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_catalog());
}
BENCHMARK(bm_check_catalog);

}  // namespace

BENCHMARK_MAIN();
