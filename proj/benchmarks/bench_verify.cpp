#include <benchmark/benchmark.h>

#include "dqp/bernoulli_identities.hpp"
#include "dqp/bundled.hpp"
#include "dqp/stasheff.hpp"

namespace {

using namespace dqp;

void BM_PairM6(benchmark::State& state) {
  AlgebraInput qp3 = make_qp3();
  AInftyStructure st(qp3.bracket, 9);
  const Algebra& alg = st.algebra();
  MixedTuple word;
  word.push_back(MixedSlot::algebra(alg.basis(1)));
  for (int p = 0; p < 2; ++p) word.push_back(MixedSlot::dual(alg.dual_basis(1)));
  word.push_back(MixedSlot::algebra(alg.basis(2)));
  for (int p = 0; p < 3; ++p) word.push_back(MixedSlot::dual(alg.dual_basis(0)));
  for (auto _ : state) benchmark::DoNotOptimize(st.pair_mn(6, word));
}
BENCHMARK(BM_PairM6);

void BM_SIGamma(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  AlgebraInput qp3 = make_qp3();
  AInftyStructure st(qp3.bracket, N + 1);
  const Algebra& alg = st.algebra();
  MixedTuple word;
  for (int p = 0; p <= N; ++p)
    word.push_back(p % 3 == 0 ? MixedSlot::algebra(alg.basis(1))
                              : MixedSlot::dual(alg.dual_basis(p % alg.dim())));
  for (auto _ : state) benchmark::DoNotOptimize(si_gamma(st, N, word));
}
BENCHMARK(BM_SIGamma)->Arg(5)->Arg(7);

void BM_TripleBracket(benchmark::State& state) {
  AlgebraInput qp3 = make_qp3();
  const Algebra& alg = qp3.algebra;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        qp3.bracket.triple_bracket(alg.basis(1), alg.basis(2), alg.basis(1)));
}
BENCHMARK(BM_TripleBracket);

void BM_CgenGrid(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(run_cgen_grid(n, Rational(1)));
}
BENCHMARK(BM_CgenGrid)->Arg(12)->Arg(24);

void BM_BcmGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_bcm_grid(state.range(0)));
}
BENCHMARK(BM_BcmGrid)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
