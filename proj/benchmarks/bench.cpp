#include <benchmark/benchmark.h>

#include <random>

#include "entopt/ancilla.hpp"
#include "entopt/measurement.hpp"
#include "entopt/optimizer.hpp"
#include "entopt/perturbation.hpp"

using namespace entopt;

namespace {

MeasurementBasis seeded_basis(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return MeasurementBasis(haar_random_unitary(dim, rng));
}

void bm_average_entropy(benchmark::State& st) {
  const int dc = static_cast<int>(st.range(0));
  const TripartiteState s = haar_random_state(3, 3, dc, 1);
  const MeasurementBasis b = seeded_basis(dc, 2);
  for (auto _ : st) {
    benchmark::DoNotOptimize(average_entropy(s, b));
  }
}
BENCHMARK(bm_average_entropy)->Arg(2)->Arg(4)->Arg(8);

void bm_decompose(benchmark::State& st) {
  const int dc = static_cast<int>(st.range(0));
  const TripartiteState s = haar_random_state(3, 3, dc, 1);
  const MeasurementBasis b = seeded_basis(dc, 2);
  for (auto _ : st) {
    benchmark::DoNotOptimize(decompose(s, b).average_entropy);
  }
}
BENCHMARK(bm_decompose)->Arg(2)->Arg(8);

void bm_sbar1(benchmark::State& st) {
  const int dc = static_cast<int>(st.range(0));
  const TripartiteState s = haar_random_state(3, 3, dc, 1);
  const MeasurementBasis b = seeded_basis(dc, 2);
  for (auto _ : st) {
    benchmark::DoNotOptimize(sbar1(s, b, {0, 1, ETKind::Real}));
  }
}
BENCHMARK(bm_sbar1)->Arg(2)->Arg(4)->Arg(8);

void bm_optimize_min(benchmark::State& st) {
  const int dc = static_cast<int>(st.range(0));
  const TripartiteState s = haar_random_state(2, 2, dc, 3);
  OptimizeConfig cfg;
  cfg.starts = 2;
  cfg.seed = 4;
  for (auto _ : st) {
    benchmark::DoNotOptimize(optimize(s, Target::Min, cfg).value);
  }
}
BENCHMARK(bm_optimize_min)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void bm_brute_force(benchmark::State& st) {
  const TripartiteState s = haar_random_state(2, 2, 2, 5);
  for (auto _ : st) {
    benchmark::DoNotOptimize(brute_force_qubit(s, static_cast<int>(st.range(0))).min);
  }
}
BENCHMARK(bm_brute_force)->Arg(61)->Arg(181)->Unit(benchmark::kMillisecond);

void bm_sweep(benchmark::State& st) {
  const TripartiteState s = w_state();
  for (auto _ : st) {
    benchmark::DoNotOptimize(sweep(s, static_cast<int>(st.range(0)), 1).size());
  }
}
BENCHMARK(bm_sweep)->Arg(181)->Unit(benchmark::kMillisecond);

void bm_bound_table(benchmark::State& st) {
  const DensityMatrix rho = reduced_density(w_state(), Part::AB);
  OptimizeConfig cfg;
  cfg.starts = 2;
  cfg.seed = 6;
  for (auto _ : st) {
    benchmark::DoNotOptimize(bound_mixed_state(rho, 2, 2, {1, 2}, cfg).back().ef_bound);
  }
}
BENCHMARK(bm_bound_table)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
