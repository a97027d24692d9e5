// Serial reference vs OpenMP kernels, and Thomas vs partitioned solves.
// OMP_NUM_THREADS controls the parallel side.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "superrad/diagnostics.hpp"
#include "superrad/kernels.hpp"
#include "superrad/potentials.hpp"
#include "superrad/solver.hpp"
#include "superrad/tridiagonal.hpp"

using namespace superrad;

namespace {

std::vector<Complex> random_vector(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<Complex> v(n);
  for (auto& z : v) {
    z = {d(rng), d(rng)};
  }
  return v;
}

TridiagonalMatrix stepping_like(std::size_t n) {
  TridiagonalMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    m.lower[j] = -0.25;
    m.upper[j] = -0.25;
    m.diag[j] = Complex(1.5, 0.02);
  }
  return m;
}

template <bool Parallel>
void BM_ExplicitRhs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TridiagonalMatrix R = stepping_like(n);
  const std::vector<double> w(n, 0.04);
  const auto u = random_vector(n, 1), v = random_vector(n, 2);
  std::vector<Complex> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel::explicit_rhs(R, w, u, v, out);
    } else {
      kernels::serial::explicit_rhs(R, w, u, v, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_VelocityUpdate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_vector(n, 3), d = random_vector(n, 4), un = random_vector(n, 5), uo = random_vector(n, 6);
  auto v = random_vector(n, 7);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::parallel::velocity_update(a, d, 0.04, un, uo, v);
    } else {
      kernels::serial::velocity_update(a, d, 0.04, un, uo, v);
    }
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_ChunkedSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto u = random_vector(n, 8);
  auto term = [&](std::size_t j) { return std::norm(u[j]); };
  for (auto _ : state) {
    double s = Parallel ? kernels::parallel::chunked_sum(0, n, term) : kernels::serial::chunked_sum(0, n, term);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Thomas(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ThomasSolver solver(stepping_like(n));
  const auto b = random_vector(n, 9);
  std::vector<Complex> x(n);
  for (auto _ : state) {
    solver.solve(b, x);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Partitioned(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PartitionedSolver solver(stepping_like(n), PartitionedSolver::default_partitions(n));
  const auto b = random_vector(n, 9);
  std::vector<Complex> x(n);
  for (auto _ : state) {
    solver.solve(b, x);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

// A full Reissner-Nordstrom step on [-500, 500] at h = 0.04 (25001 nodes).
void BM_Step(benchmark::State& state) {
  const Execution exec = state.range(0) == 0 ? Execution::serial : Execution::parallel;
  const Grid grid = Grid::make(-500, 500, 0.04, 0.04);
  const RnModel model{BlackHole(2.001, 2.0), FieldParams{1.0, 0.1, 0}};
  const PotentialPair pp = sample(model, grid.nodes());
  Stepper stepper(pp, grid, BoundaryMode::transparent, Splitting::automatic, exec);
  FieldState s(grid.n);
  s.u = random_vector(grid.n, 10);
  s.v = random_vector(grid.n, 11);
  for (auto _ : state) {
    stepper.step(s);
    benchmark::DoNotOptimize(s.u.data());
  }
  state.SetLabel(exec == Execution::serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK_TEMPLATE(BM_ExplicitRhs, false)->Name("explicit_rhs/serial")->Arg(25001)->Arg(250001);
BENCHMARK_TEMPLATE(BM_ExplicitRhs, true)->Name("explicit_rhs/parallel")->Arg(25001)->Arg(250001);
BENCHMARK_TEMPLATE(BM_VelocityUpdate, false)->Name("velocity_update/serial")->Arg(25001)->Arg(250001);
BENCHMARK_TEMPLATE(BM_VelocityUpdate, true)->Name("velocity_update/parallel")->Arg(25001)->Arg(250001);
BENCHMARK_TEMPLATE(BM_ChunkedSum, false)->Name("chunked_sum/serial")->Arg(25001)->Arg(250001);
BENCHMARK_TEMPLATE(BM_ChunkedSum, true)->Name("chunked_sum/parallel")->Arg(25001)->Arg(250001);
BENCHMARK(BM_Thomas)->Name("solve/thomas")->Arg(25001)->Arg(250001);
BENCHMARK(BM_Partitioned)->Name("solve/partitioned")->Arg(25001)->Arg(250001);
BENCHMARK(BM_Step)->Name("step/rn")->Arg(0)->Arg(1);

BENCHMARK_MAIN();
