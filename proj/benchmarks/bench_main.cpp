#include <modirac/clifford.hpp>
#include <modirac/constants.hpp>
#include <modirac/dynamics.hpp>
#include <modirac/gauge.hpp>
#include <modirac/lorentz.hpp>
#include <modirac/matrix_exp.hpp>
#include <modirac/sampling.hpp>

#include <benchmark/benchmark.h>

using namespace modirac;

static void BM_MatExp(benchmark::State& state)
{
  Rng rng(1);
  const ComplexMatrix4 m = random_matrix(rng, static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_exp(m));
  }
}
BENCHMARK(BM_MatExp)->Arg(1)->Arg(10)->Arg(100);

static void BM_Evolve(benchmark::State& state)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const Vec3 p(0.3, -0.2, 0.5);
  const MomentumState s0 = MomentumState::positive_energy(g, p, 1.0);
  EvolveOptions opts;
  opts.integrator = static_cast<Integrator>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(g, s0, opts));
  }
}
BENCHMARK(BM_Evolve)
    ->Arg(static_cast<int>(Integrator::magnus2))
    ->Arg(static_cast<int>(Integrator::rk4))
    ->Unit(benchmark::kMillisecond);

static void BM_LorentzSuite(benchmark::State& state)
{
  const GammaSet g = build_gamma_set(Representation::chiral);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lorentz_suite(g, 100, 42, 1e-12));
  }
}
BENCHMARK(BM_LorentzSuite)->Unit(benchmark::kMillisecond);

// Dense exponential cost grows like (4n)^3.
static void BM_GaugeExpIdentity(benchmark::State& state)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  Rng rng(7);
  const Grid grid(static_cast<std::size_t>(state.range(0)), 2.0 * kPi);
  const GaugeProblem prob =
      make_gauge_problem(grid, random_real_series(rng, 2, 0.5), random_real_series(rng, 2, 0.5),
                         random_spinor_series(rng, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_exp_identity(prob.grid, prob.cfg, prob.state, g, 0.5));
  }
}
BENCHMARK(BM_GaugeExpIdentity)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
