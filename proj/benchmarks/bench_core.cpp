#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <qcarlitz/carlitz.hpp>
#include <qcarlitz/identities.hpp>
#include <qcarlitz/padic.hpp>
#include <qcarlitz/poly.hpp>
#include <qcarlitz/volkenborn.hpp>

using namespace qcarlitz;

namespace {

std::vector<BigInt> random_coefficients(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(static_cast<long>(rng() % 2001) - 1000);
  return out;
}

void BM_PolyMultiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Poly a = Poly::from_integers(random_coefficients(n, 1));
  const Poly b = Poly::from_integers(random_coefficients(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyMultiply)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_PolyGcd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Poly common = Poly::from_integers(random_coefficients(n, 3));
  const Poly a = common * Poly::from_integers(random_coefficients(n, 4));
  const Poly b = common * Poly::from_integers(random_coefficients(n, 5));
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(8)->Arg(16)->Arg(32);

void BM_BetaNumber(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(beta_number(n, 2));
}
BENCHMARK(BM_BetaNumber)->DenseRange(2, 10, 4);

void BM_BetaRecurrence(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(beta_number_recurrence(n, 2));
}
BENCHMARK(BM_BetaRecurrence)->DenseRange(2, 10, 4);

void BM_SymmetricTripleSum(benchmark::State& state) {
  IdentityParams p;
  p.n = static_cast<unsigned>(state.range(0));
  p.w = {1, 2, 3};
  p.y = {1, 0, 2};
  for (auto _ : state) {
    shared_beta_cache().clear();
    benchmark::DoNotOptimize(thm1_check(p));
  }
}
BENCHMARK(BM_SymmetricTripleSum)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_PadicLog(benchmark::State& state) {
  const Padic u = Padic::from_residue(BigInt(4), 3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(padic_log(u));
}
BENCHMARK(BM_PadicLog)->Arg(10)->Arg(40)->Arg(160);

void BM_VolkenbornLevel(benchmark::State& state) {
  VolkenbornJob job;
  job.N = static_cast<unsigned>(state.range(0));
  job.K = 2 * job.N + 4;
  job.f = IntegrandSpec{1, 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(volkenborn_approx(job));
}
BENCHMARK(BM_VolkenbornLevel)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
