#include <benchmark/benchmark.h>

#include <random>

#include "abspec/builders.hpp"
#include "abspec/closure.hpp"
#include "abspec/separation.hpp"
#include "abspec/spectrum.hpp"

using namespace abspec;

namespace {

void bm_spectrum_ring(benchmark::State& state) {
  Limits lim;
  lim.carrier_cap = 60;
  Algebra alg = ring_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    BitopSpace s = build_spectrum(alg, true, lim);
    benchmark::DoNotOptimize(s.ideal_labels.data());
  }
}
BENCHMARK(bm_spectrum_ring)->Arg(12)->Arg(30)->Arg(60);

void bm_mu(benchmark::State& state) {
  Algebra alg = ring_algebra(static_cast<int>(state.range(0)));
  const std::uint64_t full = (1ull << alg.size()) - 1;
  std::mt19937_64 rng(7);
  for (auto _ : state) {
    ElemSet a{rng() & full};
    benchmark::DoNotOptimize(mu(alg, a).bits);
  }
}
BENCHMARK(bm_mu)->Arg(6)->Arg(12)->Arg(30);

void bm_prime_pairs(benchmark::State& state) {
  Limits lim;
  lim.carrier_cap = 30;
  lim.enum_cap = 30;
  Algebra alg = ring_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto pairs = enumerate_prime_pairs(alg, lim);
    benchmark::DoNotOptimize(pairs.data());
  }
}
BENCHMARK(bm_prime_pairs)->Arg(6)->Arg(12)->Arg(30);

void bm_separate(benchmark::State& state) {
  Algebra alg = ring_algebra(static_cast<int>(state.range(0)));
  ClosureCache cache(alg);
  ElemSet f0 = cache.mu_single(1);
  ElemSet i0 = cache.alpha_single(0);
  for (auto _ : state) {
    SeparateResult r = separate(cache, f0, i0);
    benchmark::DoNotOptimize(r.pair.filter.bits);
  }
}
BENCHMARK(bm_separate)->Arg(6)->Arg(12)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
