#include <benchmark/benchmark.h>

#include <random>

#include "chipfire/chipfire.hpp"

namespace {

using namespace chipfire;

DirectedMultigraph two_three_path(std::size_t n) {
  IntMatrix adj(n + 1, n + 1);
  for (std::size_t v = 0; v < n; ++v) {
    adj(v, v + 1) = 2;
    adj(v + 1, v) = 3;
  }
  return DirectedMultigraph::from_adjacency(adj);
}

DirectedMultigraph random_graph(std::size_t n, unsigned max_mult, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntMatrix adj(n, n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (v != w) adj(v, w) = static_cast<unsigned long>(rng() % (max_mult + 1));
  for (std::size_t v = 0; v < n; ++v)
    if (sgn(adj(v, (v + 1) % n)) == 0) adj(v, (v + 1) % n) = 1;
  return DirectedMultigraph::from_adjacency(adj);
}

IntMatrix random_matrix(std::size_t n, long bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return m;
}

// n x (n-1) zero-sum basis whose top block has determinant `d` (diagonal
// d, 1, ..., 1 with small entries below), mixed by unimodular column moves.
ZeroSumLatticeBasis lattice_with_det(std::size_t n, long d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t m = n - 1;
  IntMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    a(i, i) = i + 1 == m ? d : 1;
    for (std::size_t j = 0; j < i; ++j) a(i, j) = static_cast<long>(rng() % 11) - 5;
  }
  for (int op = 0; op < 200; ++op) {
    const std::size_t i = rng() % m, j = rng() % m;
    if (i == j) continue;
    const long k = static_cast<long>(rng() % 3) - 1;
    for (std::size_t r = 0; r < m; ++r) a(r, i) += k * a(r, j);
  }
  IntMatrix basis(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    Integer sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      basis(i, j) = a(i, j);
      sum += a(i, j);
    }
    basis(m, j) = -sum;
  }
  return ZeroSumLatticeBasis::from_columns(basis);
}

void BM_Determinant(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 50, 1);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(10)->Arg(20)->Arg(40)->Arg(80);

void BM_HermiteNormalForm(benchmark::State& state) {
  IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 50, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(10)->Arg(20)->Arg(40);

void BM_TreeCountVector(benchmark::State& state) {
  const auto g = two_three_path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tree_count_vector(g));
}
BENCHMARK(BM_TreeCountVector)->Arg(10)->Arg(20)->Arg(40);

void BM_LaplacianFromLattice(benchmark::State& state) {
  const auto l = lattice_with_det(40, state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_from_lattice(l));
}
BENCHMARK(BM_LaplacianFromLattice)->Arg(1000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_DecideHalting(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 3, 4);
  ChipConfig sigma{IntVector(g.vertex_count())};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) sigma.chips[v] = g.outdegree(v) + Integer(v % 3);
  for (auto _ : state) benchmark::DoNotOptimize(decide_halting(g, sigma));
}
BENCHMARK(BM_DecideHalting)->Arg(4)->Arg(6);

void BM_StabilizeWithSink(benchmark::State& state) {
  const auto g = two_three_path(static_cast<std::size_t>(state.range(0)));
  const Sandpile eta{IntVector(g.vertex_count() - 1, Integer(1000))};
  for (auto _ : state) benchmark::DoNotOptimize(stabilize_with_sink(g, 0, eta));
}
BENCHMARK(BM_StabilizeWithSink)->Arg(5)->Arg(10)->Arg(20);

void BM_RecurrentIdentity(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(recurrent_identity(g, 0));
}
BENCHMARK(BM_RecurrentIdentity)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
