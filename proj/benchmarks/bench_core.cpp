#include <benchmark/benchmark.h>

#include "tendo/endoscopy.hpp"
#include "tendo/localfield.hpp"
#include "tendo/sampling.hpp"
#include "tendo/weil.hpp"

namespace {

using namespace tendo;

void BM_HilbertQp(benchmark::State& state) {
  const Prime p(state.range(0));
  const auto table = square_class_table(p);
  for (auto _ : state) {
    int acc = 0;
    for (const auto& a : table)
      for (const auto& b : table) acc += hilbert_qp(a.representative(), b.representative(), p);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_HilbertQp)->Arg(2)->Arg(3)->Arg(97);

void BM_WeilIndex(benchmark::State& state) {
  const Prime p(state.range(0));
  Rng rng(1);
  std::vector<Rational> diag;
  for (int i = 0; i < 6; ++i) diag.push_back(random_nonzero_rational(rng, 50, 7));
  const QuadForm q = QuadForm::diagonal(diag, p);
  for (auto _ : state) benchmark::DoNotOptimize(weil_index(q));
}
BENCHMARK(BM_WeilIndex)->Arg(2)->Arg(5)->Arg(7);

void BM_ConstancyCheck(benchmark::State& state) {
  const Prime p(5);
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  const ConstancyFixture fx = constancy_fixture(p, n, constancy_characters(p, n).back(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(gs_constancy_check(fx.config).passed);
}
BENCHMARK(BM_ConstancyCheck)->DenseRange(1, 3);

void BM_CharPoly(benchmark::State& state) {
  Rng rng(3);
  const Matrix m = random_integer_matrix(rng, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
