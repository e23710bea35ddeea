#include <benchmark/benchmark.h>

#include "hibi/census.hpp"
#include "hibi/hilbert.hpp"
#include "hibi/lattice.hpp"
#include "hibi/planar.hpp"
#include "hibi/poset.hpp"
#include "hibi/regularity.hpp"

namespace {

hibi::Poset grid_base(int a, int b) {
  return hibi::disjoint_union(hibi::chain_poset(a - 1, "r"),
                              hibi::chain_poset(b - 1, "c"));
}

void BM_birkhoff_grid(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  hibi::Poset p = grid_base(n, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(hibi::DistLattice::birkhoff(p));
}
BENCHMARK(BM_birkhoff_grid)->Arg(6)->Arg(10)->Arg(14);

void BM_flag_beta_boolean(benchmark::State& state) {
  hibi::Poset p = hibi::antichain_poset(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hibi::flag_beta(p));
}
BENCHMARK(BM_flag_beta_boolean)->Arg(5)->Arg(6)->Arg(7);

void BM_f_vector_boolean(benchmark::State& state) {
  hibi::DistLattice L = hibi::DistLattice::birkhoff(
      hibi::antichain_poset(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(hibi::f_vector(L));
}
BENCHMARK(BM_f_vector_boolean)->Arg(4)->Arg(5)->Arg(6);

void BM_planar_regularity(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  hibi::DistLattice L = hibi::DistLattice::birkhoff(grid_base(n, n));
  for (auto _ : state) {
    hibi::EmbedResult er = hibi::try_embed(L);
    hibi::EdgeLabeling lam = hibi::build_labeling(L, *er.embedding);
    benchmark::DoNotOptimize(hibi::max_descent_cardinality(L, lam));
    benchmark::DoNotOptimize(hibi::max_cyclic_squares(L, *er.embedding));
  }
}
BENCHMARK(BM_planar_regularity)->Arg(6)->Arg(10)->Arg(14);

void BM_verify_el_grid(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  hibi::DistLattice L = hibi::DistLattice::birkhoff(grid_base(n, n));
  hibi::EmbedResult er = hibi::try_embed(L);
  hibi::EdgeLabeling lam = hibi::build_labeling(L, *er.embedding);
  for (auto _ : state) benchmark::DoNotOptimize(hibi::verify_el(L, lam));
}
BENCHMARK(BM_verify_el_grid)->Arg(6)->Arg(10);

void BM_poset_census(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hibi::poset_census(n));
}
BENCHMARK(BM_poset_census)->Arg(5)->Arg(6);

void BM_regularity_cyclic(benchmark::State& state) {
  int r = static_cast<int>(state.range(0));
  hibi::DistLattice L = hibi::DistLattice::birkhoff(
      hibi::cyclic_poset(r, std::vector<int>(r - 1, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(hibi::regularity(L));
}
BENCHMARK(BM_regularity_cyclic)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
