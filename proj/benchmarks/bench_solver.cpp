#include <benchmark/benchmark.h>

#include "equicolor/class_digraph.hpp"
#include "equicolor/coloring.hpp"
#include "equicolor/generators.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/oracle.hpp"
#include "equicolor/solver.hpp"

using namespace equicolor;

static void BM_GridSolve(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  Graph g = gen_grid_diagonals(side, side);
  SolverConfig cfg;
  cfg.r = 13;
  for (auto _ : state) benchmark::DoNotOptimize(equitable_color(g, cfg));
  state.counters["vertices"] = g.num_vertices();
}
BENCHMARK(BM_GridSolve)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_RandomPieceSolve(benchmark::State& state) {
  Graph g = gen_random_subgraph(30, 30, static_cast<int>(state.range(0)), 7);
  SolverConfig cfg;
  cfg.r = 13;
  for (auto _ : state) benchmark::DoNotOptimize(equitable_color(g, cfg));
}
BENCHMARK(BM_RandomPieceSolve)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

static void BM_DigraphBuild(benchmark::State& state) {
  Graph g = gen_grid_diagonals(26, 26);
  Coloring c = round_robin(g.num_vertices(), 13);
  c.unassign(0);
  for (auto _ : state) benchmark::DoNotOptimize(ClassDigraph::build(g, c));
}
BENCHMARK(BM_DigraphBuild);

static void BM_StuckFix(benchmark::State& state) {
  StuckInstance inst = stuck_double_hub();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fix_conflict(inst.graph, inst.full, inst.heldout, inst.partner, ImproveOptions{}));
}
BENCHMARK(BM_StuckFix);

static void BM_OracleK77(benchmark::State& state) {
  Graph g = gen_complete_bipartite(7, 7);
  for (auto _ : state) benchmark::DoNotOptimize(chi_e_profile(g, 14));
}
BENCHMARK(BM_OracleK77)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
