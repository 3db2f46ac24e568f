#include <benchmark/benchmark.h>

#include "rayleigh/basis_poly.hpp"
#include "rayleigh/catalog.hpp"
#include "rayleigh/checks.hpp"
#include "rayleigh/delta.hpp"
#include "rayleigh/graph.hpp"
#include "rayleigh/matroid.hpp"

using namespace rayleigh;

// Building a catalog entry covers basis enumeration from the defining data
// (a matrix over GF(2) in this case).
static void bench_catalog_build(benchmark::State& state) {
  for (auto _ : state) {
    Matroid m = catalog_get("a8").matroid;
    benchmark::DoNotOptimize(m.bases.size());
  }
}
BENCHMARK(bench_catalog_build);

static void bench_spanning_trees(benchmark::State& state) {
  Graph g = parallel_path_graph(3, 5);
  for (auto _ : state) {
    std::vector<Subset> trees = spanning_trees(g);
    benchmark::DoNotOptimize(trees.size());
  }
}
BENCHMARK(bench_spanning_trees);

static void bench_symbolic_difference(benchmark::State& state) {
  Matroid m = catalog_get("s8").matroid;
  int e = m.index_of("1"), f = m.index_of("8");
  for (auto _ : state) {
    SparsePoly d = rayleigh_diff(m, e, f);
    benchmark::DoNotOptimize(d.term_count());
  }
}
BENCHMARK(bench_symbolic_difference);

static void bench_difference_at_point(benchmark::State& state) {
  Matroid m = catalog_get("l-transversal").matroid;
  int e = m.index_of("e"), f = m.index_of("f");
  std::vector<Scalar> point;
  for (int i = 0; i < m.size(); ++i) point.push_back(make_scalar(i + 1, 3));
  for (auto _ : state) {
    Scalar v = delta_value(m, e, f, point);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bench_difference_at_point);

static void bench_balanced_sweep(benchmark::State& state) {
  Matroid m = catalog_get("f7").matroid;
  for (auto _ : state) {
    PropertyReport rep = balanced_check(m);
    benchmark::DoNotOptimize(rep.verdict);
  }
}
BENCHMARK(bench_balanced_sweep);

BENCHMARK_MAIN();
