#include <random>

#include <benchmark/benchmark.h>

#include "tilek/adjacency.hpp"
#include "tilek/homology.hpp"
#include "tilek/ktheory.hpp"
#include "tilek/snf.hpp"

using namespace tilek;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols) {
  std::mt19937_64 g(rows * 7919 + cols);
  std::uniform_int_distribution<long> d(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(g);
  return m;
}

void BM_SnfRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = random_matrix(n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m).rank);
}
BENCHMARK(BM_SnfRandom)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_SnfWithTransforms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = random_matrix(n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m, true).rank);
}
BENCHMARK(BM_SnfWithTransforms)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_BuildPair(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BipartiteGraph g = BipartiteGraph::complete(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(build_pair(g, {SystemKind::PointedTile, 2}).horizontal.dimension());
}
BENCHMARK(BM_BuildPair)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_VerifyPointedTile(benchmark::State& state) {
  const auto a = static_cast<std::size_t>(state.range(0));
  const BipartiteGraph g = BipartiteGraph::complete(a, 6);
  for (auto _ : state) benchmark::DoNotOptimize(verify(g, {SystemKind::PointedTile, 2}).match());
}
BENCHMARK(BM_VerifyPointedTile)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_VerifyStar(benchmark::State& state) {
  const BipartiteGraph g = BipartiteGraph::complete(4, 6);
  const auto t = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify(g, {SystemKind::PointedStar, t}).match());
}
BENCHMARK(BM_VerifyStar)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BipartiteGraph g = BipartiteGraph::complete(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(homology_groups(contracted_complex(g, 3)).h2.free_rank());
}
BENCHMARK(BM_Homology)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
