#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "vrph/cob_edge.hpp"
#include "vrph/cob_tri.hpp"
#include "vrph/pipeline.hpp"
#include "vrph/reduce.hpp"

using namespace vrph;

namespace {

point_cloud unit_cube_cloud(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  point_cloud pc;
  pc.dim = 3;
  pc.coords.reserve(n * 3);
  for (std::size_t i = 0; i < n * 3; ++i) pc.coords.push_back(coord(rng));
  return pc;
}

filtration make_filtration(std::size_t n, double thr) {
  edge_set es = enumerate_edges(unit_cube_cloud(7, n), thr);
  return build_filtration(es.n, std::move(es.edges));
}

void bm_build_filtration(benchmark::State& state) {
  std::size_t n = std::size_t(state.range(0));
  point_cloud pc = unit_cube_cloud(7, n);
  edge_set es = enumerate_edges(pc, 0.4);
  for (auto _ : state) {
    std::vector<edge_candidate> copy = es.edges;
    filtration f = build_filtration(es.n, std::move(copy));
    benchmark::DoNotOptimize(f.min_cob.data());
  }
  state.counters["edges"] = double(es.edges.size());
}
BENCHMARK(bm_build_filtration)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void bm_edge_coboundary_walk(benchmark::State& state) {
  filtration f = make_filtration(std::size_t(state.range(0)), 0.4);
  std::uint64_t visited = 0;
  for (auto _ : state) {
    for (edge_t e = 0; e < f.n_edges(); ++e)
      for (phi_edge p = find_smallest_t(f, e); !p.exhausted(); find_next_t(f, p))
        ++visited;
  }
  benchmark::DoNotOptimize(visited);
  state.counters["triangles/iter"] =
      double(visited) / double(state.iterations() ? state.iterations() : 1);
}
BENCHMARK(bm_edge_coboundary_walk)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void bm_tri_coboundary_first(benchmark::State& state) {
  filtration f = make_filtration(std::size_t(state.range(0)), 0.4);
  std::vector<paired_index> tris;
  std::vector<paired_index> buf;
  for (edge_t e = 0; e < f.n_edges(); ++e) {
    buf.clear();
    diameter_triangles_desc(f, e, buf);
    tris.insert(tris.end(), buf.begin(), buf.end());
  }
  for (auto _ : state) {
    std::uint64_t hits = 0;
    for (paired_index t : tris)
      if (!find_smallest_h(f, t).exhausted()) ++hits;
    benchmark::DoNotOptimize(hits);
  }
  state.counters["triangles"] = double(tris.size());
}
BENCHMARK(bm_tri_coboundary_first)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void bm_persistence(benchmark::State& state) {
  filtration f = make_filtration(std::size_t(state.range(0)), 0.4);
  run_params p;
  p.maxdim = int(state.range(1));
  for (auto _ : state) {
    pipeline_result res = compute_persistence(f, p);
    benchmark::DoNotOptimize(res.dgm[0].data());
  }
}
BENCHMARK(bm_persistence)
    ->Args({256, 1})
    ->Args({256, 2})
    ->Args({512, 1})
    ->Args({512, 2})
    ->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
