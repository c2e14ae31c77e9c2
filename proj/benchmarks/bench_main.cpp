#include <benchmark/benchmark.h>

#include "sigmod8/enhancements.hpp"
#include "sigmod8/fibration.hpp"
#include "sigmod8/intforms.hpp"
#include "sigmod8/random.hpp"

using namespace sigmod8;

static void BM_BkGauss(benchmark::State& state) {
  Rng rng(1);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto q = random_z4_enhancement(rng, random_nonsingular_z2(rng, dim));
  for (auto _ : state) benchmark::DoNotOptimize(bk_gauss(q));
  state.SetComplexityN(std::int64_t{1} << dim);
}
BENCHMARK(BM_BkGauss)->DenseRange(8, 20, 4)->Complexity(benchmark::oN);

static void BM_BkClassify(benchmark::State& state) {
  Rng rng(2);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto q = random_z4_enhancement(rng, random_nonsingular_z2(rng, dim));
  for (auto _ : state) benchmark::DoNotOptimize(bk_classify(q));
}
BENCHMARK(BM_BkClassify)->RangeMultiplier(2)->Range(8, 128);

static void BM_SignatureExact(benchmark::State& state) {
  Rng rng(3);
  const auto m = to_rational(random_symmetric(rng, static_cast<std::size_t>(state.range(0)), 9).matrix());
  for (auto _ : state) benchmark::DoNotOptimize(signature_exact(m));
}
BENCHMARK(BM_SignatureExact)->RangeMultiplier(2)->Range(4, 32);

static void BM_WallClosed(benchmark::State& state) {
  Rng rng(4);
  const auto h = static_cast<std::size_t>(state.range(0));
  // Fewer than 2h transvections always leave a fixed vector, so allow longer words.
  SymplecticMatrix f = random_symplectic(rng, h, 4 * h);
  while (determinant(RatMatrix::identity(2 * h) - to_rational(f.matrix())) == 0) f = random_symplectic(rng, h, 4 * h);
  const auto g = random_symplectic(rng, h);
  for (auto _ : state) benchmark::DoNotOptimize(signature_exact(wall_form_closed(f, g)));
}
BENCHMARK(BM_WallClosed)->DenseRange(1, 4);

static void BM_WallGeneral(benchmark::State& state) {
  Rng rng(5);
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto f = random_symplectic(rng, h);
  const auto g = random_symplectic(rng, h);
  for (auto _ : state) benchmark::DoNotOptimize(wall_form_general(f, g).signature);
}
BENCHMARK(BM_WallGeneral)->DenseRange(1, 4);

static void BM_BundleSignature(benchmark::State& state) {
  Rng rng(6);
  const auto m = random_monodromy(rng, static_cast<std::size_t>(state.range(0)));
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(bundle_signature(m, parallel));
}
BENCHMARK(BM_BundleSignature)->ArgsProduct({{1, 2, 3}, {0, 1}});

BENCHMARK_MAIN();
