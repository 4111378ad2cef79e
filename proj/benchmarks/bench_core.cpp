#include <mirrorborn/analogy.hpp>
#include <mirrorborn/mirror.hpp>
#include <mirrorborn/rng.hpp>
#include <mirrorborn/spectral.hpp>
#include <mirrorborn/states.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace mirrorborn;

namespace {

WaveFunction packet_on(int n) {
  return gaussian_packet({.x0 = 0.0, .p0 = 1.5, .sigma_x = 1.0},
                         make_grid(n, -20.0, 20.0));
}

HermitianOperator random_hermitian(int k, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<cplx> e(std::size_t(k) * k);
  for (int i = 0; i < k; ++i) {
    e[std::size_t(i) * k + i] = 2.0 * rng.next_double() - 1.0;
    for (int j = i + 1; j < k; ++j) {
      const cplx v{2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
      e[std::size_t(i) * k + j] = v;
      e[std::size_t(j) * k + i] = std::conj(v);
    }
  }
  return make_hermitian(k, std::move(e));
}

void bm_to_momentum(benchmark::State& state) {
  const WaveFunction pos = packet_on(int(state.range(0)));
  for (auto _ : state) {
    WaveFunction mom = to_momentum(pos);
    benchmark::DoNotOptimize(mom.amp.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_to_momentum)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

// Non-power-of-two sizes take the direct summation path.
void bm_to_momentum_direct(benchmark::State& state) {
  const WaveFunction pos = packet_on(int(state.range(0)));
  for (auto _ : state) {
    WaveFunction mom = to_momentum(pos);
    benchmark::DoNotOptimize(mom.amp.data());
  }
}
BENCHMARK(bm_to_momentum_direct)->Arg(240)->Arg(1000);

void bm_round_trip(benchmark::State& state) {
  const WaveFunction pos = packet_on(int(state.range(0)));
  for (auto _ : state) {
    WaveFunction back = to_position(to_momentum(pos));
    benchmark::DoNotOptimize(back.amp.data());
  }
}
BENCHMARK(bm_round_trip)->Arg(1024);

void bm_eigendecompose(benchmark::State& state) {
  const HermitianOperator H = random_hermitian(int(state.range(0)), 2024);
  for (auto _ : state) {
    SpectralDecomposition dec = eigendecompose(H);
    benchmark::DoNotOptimize(dec.eigenvalues.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_eigendecompose)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void bm_born_compare(benchmark::State& state) {
  const WaveFunction mom = to_momentum(packet_on(int(state.range(0))));
  for (auto _ : state) {
    MirrorReport rep = born_compare(mom, 1e-10);
    benchmark::DoNotOptimize(rep.dev_reflect_conj);
  }
}
BENCHMARK(bm_born_compare)->Arg(1024)->Arg(4096);

void bm_sample_outcomes(benchmark::State& state) {
  const ProbabilityTable table =
      make_probability_table({0.1, 0.2, 0.3, 0.4}, {0.0, 1.0, 2.0, 3.0});
  for (auto _ : state) {
    std::vector<std::int64_t> counts =
        sample_outcomes(table, state.range(0), 42);
    benchmark::DoNotOptimize(counts.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_sample_outcomes)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

void bm_two_ball(benchmark::State& state) {
  TwoBallConfig cfg;
  cfg.bins = 8;
  cfg.p1.assign(8, 0.125);
  cfg.p2.assign(8, 0.125);
  cfg.n = state.range(0);
  cfg.seed = 7;
  for (auto _ : state) {
    TwoBallResult res = run_two_ball(cfg);
    benchmark::DoNotOptimize(res.coincidences);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_two_ball)->Arg(1 << 14)->Arg(1 << 18);

}  // namespace

BENCHMARK_MAIN();
