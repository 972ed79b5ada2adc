#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "genus/bounds.hpp"
#include "genus/faces.hpp"
#include "genus/search.hpp"
#include "test_graphs.hpp"

namespace tg = genus::testing;
using genus::Graph;

namespace {

void BM_TraceFaces(benchmark::State& state) {
  Graph g = tg::tutte_coxeter();
  genus::RotationSystem rot = genus::natural_rotation(g);
  for (auto _ : state) {
    auto faces = genus::trace_faces<genus::VertexSet64>(g, rot);
    benchmark::DoNotOptimize(faces);
  }
}
BENCHMARK(BM_TraceFaces);

void BM_LowerBound(benchmark::State& state) {
  Graph g = tg::tutte_coxeter();
  for (auto _ : state) {
    auto report = genus::genus_lower_bound(g);
    benchmark::DoNotOptimize(report.genus_lb);
  }
}
BENCHMARK(BM_LowerBound);

void BM_ComputeGenusK7(benchmark::State& state) {
  Graph g = tg::complete(7);
  for (auto _ : state) {
    auto r = genus::compute_genus(g);
    benchmark::DoNotOptimize(r.genus);
  }
}
BENCHMARK(BM_ComputeGenusK7);

void BM_ComputeGenusM11(benchmark::State& state) {
  Graph g = tg::max_matching_complement(11);
  for (auto _ : state) {
    auto r = genus::compute_genus(g);
    benchmark::DoNotOptimize(r.genus);
  }
}
BENCHMARK(BM_ComputeGenusM11);

void BM_ComputeGenusTutteCoxeter(benchmark::State& state) {
  Graph g = tg::tutte_coxeter();
  for (auto _ : state) {
    auto r = genus::compute_genus(g);
    benchmark::DoNotOptimize(r.genus);
  }
}
BENCHMARK(BM_ComputeGenusTutteCoxeter);

void BM_EnumerateK5Torus(benchmark::State& state) {
  Graph g = tg::complete(5);
  for (auto _ : state) {
    auto r = genus::enumerate_embeddings(g, 1);
    benchmark::DoNotOptimize(r.count);
  }
}
BENCHMARK(BM_EnumerateK5Torus);

void BM_PlanarityCubic50(benchmark::State& state) {
  std::mt19937 rng(99);
  std::vector<Graph> batch;
  for (int i = 0; i < 64; ++i) batch.push_back(tg::random_cubic(50, rng));
  size_t i = 0;
  for (auto _ : state) {
    auto r = genus::genus_at_most(batch[i++ % batch.size()], 0);
    benchmark::DoNotOptimize(r.at_most);
  }
}
BENCHMARK(BM_PlanarityCubic50);

}  // namespace

BENCHMARK_MAIN();
