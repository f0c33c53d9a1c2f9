#include <benchmark/benchmark.h>

#include <cstdint>

#include "fplab/counting.hpp"
#include "fplab/linear_system.hpp"
#include "fplab/multilinear.hpp"
#include "fplab/phase.hpp"
#include "fplab/polynomial.hpp"
#include "fplab/random.hpp"
#include "fplab/table.hpp"
#include "fplab/uniformity.hpp"

namespace fplab {
namespace {

Polynomial bench_polynomial(std::int32_t p, int n, int d) {
  Rng rng(12);
  Polynomial out(p, n);
  std::vector<std::int32_t> e(static_cast<std::size_t>(n), 0);
  // A dense-ish degree-d polynomial: x_i^d terms plus mixed quadratics.
  for (int i = 0; i < n; ++i) {
    e.assign(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = d;
    out.add_term(e, rng.nonzero_residue(p));
    for (int j = i + 1; j < n; ++j) {
      e.assign(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      e[static_cast<std::size_t>(j)] = 1;
      out.add_term(e, rng.residue(p));
    }
  }
  return out;
}

void BM_AnalyticRank(benchmark::State& state) {
  const auto p = static_cast<std::int32_t>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int d = static_cast<int>(state.range(2));
  const MultilinearForm kappa =
      MultilinearForm::derived_from(bench_polynomial(p, n, d), d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_rank(kappa).kernel_count);
  }
  state.SetComplexityN(static_cast<std::int64_t>(domain_size(p, n * (d - 1))));
}
BENCHMARK(BM_AnalyticRank)
    ->Args({3, 3, 2})
    ->Args({5, 3, 2})
    ->Args({3, 3, 3})
    ->Args({5, 2, 3});

void BM_GowersNorm(benchmark::State& state) {
  const auto p = static_cast<std::int32_t>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int k = static_cast<int>(state.range(2));
  Rng rng(7);
  TableFunction f(p, n);
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    f[i] = {rng.unit_real() * 2.0 - 1.0, rng.unit_real() * 2.0 - 1.0};
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(gowers_norm(f, k).value);
  }
}
BENCHMARK(BM_GowersNorm)
    ->Args({3, 3, 2})
    ->Args({3, 3, 3})
    ->Args({5, 2, 3})
    ->Args({5, 3, 2});

void BM_ExactPhasePower(benchmark::State& state) {
  const auto p = static_cast<std::int32_t>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const int k = static_cast<int>(state.range(2));
  const Polynomial pi = bench_polynomial(p, n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_phase_unorm_power(pi, k).to_double());
  }
}
BENCHMARK(BM_ExactPhasePower)->Args({3, 4, 2})->Args({5, 3, 2})->Args({3, 3, 3});

// The reparametrized backend enumerates p^{n rho} points instead of p^{nd};
// the padded system below has d = 3 but rho = 2.
void BM_SystemAverage(benchmark::State& state) {
  const auto p = static_cast<std::int32_t>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const bool reparametrized = state.range(2) != 0;
  const LinearSystem system = parse_system("1,0,0\n0,1,0\n1,1,0", p);
  std::vector<Polynomial> phases;
  for (int i = 0; i < system.m(); ++i) {
    phases.push_back(bench_polynomial(p, n, 2));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        phase_system_average(phases, system, {}, reparametrized).average);
  }
}
BENCHMARK(BM_SystemAverage)
    ->Args({3, 2, 0})
    ->Args({3, 2, 1})
    ->Args({5, 2, 0})
    ->Args({5, 2, 1});

}  // namespace
}  // namespace fplab

BENCHMARK_MAIN();
