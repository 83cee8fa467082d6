#include <benchmark/benchmark.h>

#include "nlat/decomposition.hpp"
#include "nlat/oracle.hpp"
#include "nlat/random.hpp"

using namespace nlat;

namespace {

GramMatrix sparse_instance(int d) { return random_gram_sparse_precision(d, 97, 0.2).gram; }

void BM_PoSchur(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  GramMatrix g = sparse_instance(d);
  const Subset s = Subset::full(d).without(0).without(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(po_schur(g, Subset::of({0}), s, Subset::of({1})));
  }
}
BENCHMARK(BM_PoSchur)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ComputeLattice(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  GramMatrix g = sparse_instance(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_lattice(g, 0, Subset::of({1})));
  }
}
BENCHMARK(BM_ComputeLattice)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Decompose(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  GramMatrix g = sparse_instance(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(g, 0));
  }
}
BENCHMARK(BM_Decompose)->DenseRange(6, 14, 2);

void BM_BruteDecompose(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  GramMatrix g = sparse_instance(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_decompose(g, 0));
  }
}
BENCHMARK(BM_BruteDecompose)->DenseRange(6, 14, 2);

void BM_FindUncovered(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  GramMatrix g = sparse_instance(d);
  LatticeDecomposition dec = decompose(g, 0);
  // drop the last interval so the descent has to find a certificate
  std::vector<NeighborhoodLattice> partial(dec.intervals.begin(), dec.intervals.end() - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_uncovered(d, 0, partial));
  }
  state.counters["K"] = static_cast<double>(partial.size());
}
BENCHMARK(BM_FindUncovered)->DenseRange(8, 16, 2);

void BM_GraphicalLattice(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto inst = random_gram_sparse_precision(d, 97, 0.2);
  Pcg p = pcg(inst.gram);
  for (auto _ : state) {
    benchmark::DoNotOptimize(graphical_lattice(p, 0, Subset::of({1})));
  }
}
BENCHMARK(BM_GraphicalLattice)->Arg(16)->Arg(32)->Arg(64);

void BM_StreamPo(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  GramMatrix g = sparse_instance(d);
  LatticeDecomposition dec = decompose(g, 0);
  for (auto _ : state) {
    PoStream stream(dec);
    std::uint64_t n = 0;
    while (stream.next()) ++n;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_StreamPo)->DenseRange(8, 14, 2);

}  // namespace

BENCHMARK_MAIN();
