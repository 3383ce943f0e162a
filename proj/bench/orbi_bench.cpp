#include <benchmark/benchmark.h>

#include "orbi/burnside.hpp"
#include "orbi/chenruan.hpp"
#include "orbi/kernels.hpp"

using namespace orbi;

namespace {

GSpace p1_power(int copies) {
  const auto G = FiniteGroup::abelian({copies});
  std::vector<int> cyc(static_cast<size_t>(copies));
  for (int i = 0; i < copies; ++i) cyc[static_cast<size_t>(i)] = (i + 1) % copies;
  return build_product_projective(G, std::vector<int>(static_cast<size_t>(copies), 1), {cyc}, {});
}

GSpace linear(int n, int d) {
  const auto G = FiniteGroup::abelian({n});
  std::vector<Character> chars;
  for (int i = 0; i <= d; ++i) chars.push_back(character_from_exponents(G, std::vector<int>{i % n}));
  return build_linear_projective(G, chars);
}

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_SectorAveraging(benchmark::State& st) {
  const auto S = linear(12, 11);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::sector_contributions(S, nullptr, exec_of(st)));
}
BENCHMARK(BM_SectorAveraging)->Arg(0)->Arg(1);

void BM_CommutingPairEuler(benchmark::State& st) {
  const auto S = p1_power(6);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::commuting_pair_euler_sum(S, exec_of(st)));
}
BENCHMARK(BM_CommutingPairEuler)->Arg(0)->Arg(1);

void BM_RelationRows(benchmark::State& st) {
  const auto G = FiniteGroup::abelian({2, 4});
  const auto U = symbol_universe(G, 3);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::relation_rows(G, U, 3, exec_of(st)));
}
BENCHMARK(BM_RelationRows)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
