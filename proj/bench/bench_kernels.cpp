// Serial reference vs OpenMP kernels.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qgf/parallel.hpp"
#include "qgf/qoperators.hpp"
#include "qgf/verify.hpp"

namespace {

std::vector<qgf::Rational> random_coeffs(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 999);
  std::vector<qgf::Rational> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    v.emplace_back(num(rng), den(rng));
  return v;
}

void BM_CauchySerial(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(qgf::cauchy_product_serial(a, b, n - 1));
}

void BM_CauchyParallel(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(qgf::cauchy_product_parallel(a, b, n - 1));
}

template <qgf::Execution Exec>
void BM_VerifyGrid(benchmark::State &state) {
  const auto tasks = qgf::default_tasks(qgf::Identity::mkz_gf);
  for (auto _ : state)
    benchmark::DoNotOptimize(qgf::run_verification(qgf::Rational(9, 10), tasks, Exec));
}

template <qgf::Execution Exec>
void BM_BetaOperatorGrid(benchmark::State &state) {
  std::vector<qgf::OperatorRequest> reqs;
  for (int n = 1; n <= 8; ++n)
    for (int i = 0; i <= 64; ++i) {
      qgf::OperatorRequest r;
      r.family = qgf::BasisFamily::beta;
      r.f = qgf::FunctionSpec::expneg();
      r.n = n;
      r.x = qgf::Rational(i, 8);
      reqs.push_back(r);
    }
  for (auto _ : state)
    benchmark::DoNotOptimize(qgf::evaluate_operator_grid(qgf::Rational(3, 4), reqs, Exec));
}

} // namespace

BENCHMARK(BM_CauchySerial)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_CauchyParallel)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_VerifyGrid<qgf::Execution::serial>);
BENCHMARK(BM_VerifyGrid<qgf::Execution::parallel>);
BENCHMARK(BM_BetaOperatorGrid<qgf::Execution::serial>);
BENCHMARK(BM_BetaOperatorGrid<qgf::Execution::parallel>);

BENCHMARK_MAIN();
