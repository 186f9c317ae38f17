#include <benchmark/benchmark.h>

#include <cmath>

#include "psharm/ladder.hpp"
#include "psharm/oracle.hpp"
#include "psharm/specfun.hpp"
#include "psharm/spectrum.hpp"
#include "psharm/wavefunction.hpp"

namespace {

using namespace psharm;

const CoefficientSet kPseudo = from_molecular({1.0, 1.0});

void BM_reduce(benchmark::State& state) {
  const QuantumNumbers q{3, 2, 5};
  for (auto _ : state) benchmark::DoNotOptimize(reduce(kPseudo, q));
}
BENCHMARK(BM_reduce);

void BM_energy(benchmark::State& state) {
  const QuantumNumbers q{3, 2, 5};
  for (auto _ : state)
    benchmark::DoNotOptimize(spectrum::energy(kPseudo, q).energy);
}
BENCHMARK(BM_energy);

void BM_laguerre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::laguerre(n, 1.5, x));
    x = x < 30.0 ? x + 0.1 : 0.1;
  }
}
BENCHMARK(BM_laguerre)->Arg(5)->Arg(20)->Arg(50);

void BM_eval_r(benchmark::State& state) {
  const auto s = radial::make_state(kPseudo, {4, 2, 5});
  double r = 0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(radial::eval_r(s, r));
    r = r < 6.0 ? r + 0.01 : 0.2;
  }
}
BENCHMARK(BM_eval_r);

void BM_norm_integral(benchmark::State& state) {
  const auto s = radial::make_state(kPseudo, {3, 1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(radial::norm_integral(s));
}
BENCHMARK(BM_norm_integral);

void BM_oracle_solve(benchmark::State& state) {
  const auto problem =
      oracle::make_problem(kPseudo, 1, 3, 3, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::solve(problem, 4).eigenvalues[0]);
}
BENCHMARK(BM_oracle_solve)->Arg(1500)->Arg(6000);

void BM_ladder_casimir(benchmark::State& state) {
  const ladder::LadderCoeffs ctx{2.5, 3};
  const auto v = ladder::BasisVector::basis(ctx, 10);
  for (auto _ : state) benchmark::DoNotOptimize(ladder::casimir(v).at(10));
}
BENCHMARK(BM_ladder_casimir);

}  // namespace

BENCHMARK_MAIN();
