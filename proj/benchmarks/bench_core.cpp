// Micro benchmarks for the enumeration and product kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "fiburn/algebra.hpp"
#include "fiburn/families.hpp"
#include "fiburn/idempotents.hpp"

using namespace fiburn;

namespace {

// fresh group instance per iteration so the lattice cache is cold
GroupPtr fresh_copy(const GroupPtr& g) {
  std::vector<std::uint16_t> t(static_cast<std::size_t>(g->order()) * g->order());
  for (Elt a = 0; a < g->order(); ++a)
    for (Elt b = 0; b < g->order(); ++b)
      t[static_cast<std::size_t>(a) * g->order() + b] =
          static_cast<std::uint16_t>(g->mul(a, b));
  return Group::make(g->order(), std::move(t), g->name());
}

void BM_subgroup_lattice_d8xd8(benchmark::State& state) {
  GroupPtr d8 = build_group("D8");
  for (auto _ : state) {
    state.PauseTiming();
    GroupPtr fresh = fresh_copy(direct_product(d8, d8).group);
    state.ResumeTiming();
    benchmark::DoNotOptimize(fresh->subgroups().size());
  }
}
BENCHMARK(BM_subgroup_lattice_d8xd8)->Unit(benchmark::kMillisecond);

void BM_mackey_product_d8(benchmark::State& state) {
  GroupPtr d8 = build_group("D8");
  SpacePtr sp = BisetSpace::get(d8, d8);
  const auto& basis = sp->basis();
  std::mt19937_64 rng(1);
  std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
  for (int i = 0; i < 64; ++i) {
    AlgebraElement x(sp), y(sp);
    x.add_term(basis[rng() % basis.size()], 1);
    y.add_term(basis[rng() % basis.size()], 1);
    pairs.emplace_back(std::move(x), std::move(y));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(mackey_product(x, y).terms().size());
  }
}
BENCHMARK(BM_mackey_product_d8);

void BM_phi_system_d8(benchmark::State& state) {
  GroupPtr d8 = build_group("D8");
  for (auto _ : state) {
    state.PauseTiming();
    GroupPtr fresh = fresh_copy(d8);
    state.ResumeTiming();
    const PairPoset& poset = pair_poset(fresh, PosetVariant::Frattini);
    AlgebraElement sum(BisetSpace::get(fresh, fresh));
    for (const PairTag& t : poset.tags) sum += phi(fresh, t);
    benchmark::DoNotOptimize(sum.terms().size());
  }
}
BENCHMARK(BM_phi_system_d8)->Unit(benchmark::kMillisecond);

void BM_epsilon_system_c8(benchmark::State& state) {
  GroupPtr c8 = build_group("C8");
  for (auto _ : state) {
    state.PauseTiming();
    GroupPtr fresh = fresh_copy(c8);
    state.ResumeTiming();
    AlgebraElement sum(BisetSpace::get(fresh, fresh));
    for (const auto& idx : epsilon_indices(fresh)) sum += epsilon(fresh, idx);
    benchmark::DoNotOptimize(sum.terms().size());
  }
}
BENCHMARK(BM_epsilon_system_c8)->Unit(benchmark::kMillisecond);

void BM_automorphisms_e16(benchmark::State& state) {
  GroupPtr e16 = build_group("C2 x C2 x C2 x C2");
  for (auto _ : state) {
    state.PauseTiming();
    GroupPtr fresh = fresh_copy(e16);
    state.ResumeTiming();
    benchmark::DoNotOptimize(fresh->automorphisms().size());
  }
}
BENCHMARK(BM_automorphisms_e16)->Unit(benchmark::kMillisecond);

}  // namespace
