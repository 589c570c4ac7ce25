#include <benchmark/benchmark.h>

#include <random>

#include "arthur/arthur.hpp"

namespace {

using namespace arthur;

std::vector<JordanBlock> random_jord(std::size_t n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> d(1, 8);
  std::vector<JordanBlock> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(JordanBlock{"r", d(gen), d(gen), Rational(0)});
  return out;
}

void BM_EnumerateParams(benchmark::State& state) {
  const OrderedJord psi{random_jord(static_cast<std::size_t>(state.range(0)), 7), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_params(psi, Sign::Plus));
}
BENCHMARK(BM_EnumerateParams)->DenseRange(2, 6);

void BM_CountParams(benchmark::State& state) {
  const auto jord = random_jord(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(count_params(jord, Sign::Minus));
}
BENCHMARK(BM_CountParams)->RangeMultiplier(4)->Range(4, 256);

void BM_JacNormalForm(benchmark::State& state) {
  std::mt19937 gen(9);
  std::uniform_int_distribution<int> v(-12, 12);
  std::vector<HalfInt> word;
  for (int i = 0; i < state.range(0); ++i) word.push_back(HalfInt::from_int(v(gen)));
  for (auto _ : state) benchmark::DoNotOptimize(jac_normal_form(word));
}
BENCHMARK(BM_JacNormalForm)->RangeMultiplier(2)->Range(8, 128);

// The full grid behind the pole-criterion equivalence.
void BM_PoleSweep(benchmark::State& state) {
  for (auto _ : state) {
    int hits = 0;
    for (int a = 1; a <= 16; ++a)
      for (int b = 1; b <= 16; ++b)
        for (int a0 = 1; a0 <= 16; ++a0)
          for (int b0 = 2; b0 <= 16; ++b0) hits += pole_contribution_interval(a, b, a0, b0);
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_PoleSweep);

void BM_ChainCriterion(benchmark::State& state) {
  const auto blocks = random_jord(static_cast<std::size_t>(state.range(0)), 10);
  const ArthurParameter psi{GroupType{}, blocks};
  const Segment seg(blocks.front().quadruple().signed_b(), HalfInt::from_int(9));
  for (auto _ : state) benchmark::DoNotOptimize(jac_nonvanishing_necessary(psi, "r", seg));
}
BENCHMARK(BM_ChainCriterion)->RangeMultiplier(4)->Range(4, 256);

void BM_CanonicalOrder(benchmark::State& state) {
  const TargetTriple target = TargetTriple::make("r", 5, 3);
  auto jord = random_jord(static_cast<std::size_t>(state.range(0)), 11);
  jord.push_back(target.prime_block());
  for (auto _ : state) benchmark::DoNotOptimize(validate_order(canonical_order(jord, target), target));
}
BENCHMARK(BM_CanonicalOrder)->RangeMultiplier(4)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
