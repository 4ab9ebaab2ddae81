#include <benchmark/benchmark.h>

#include "koopman/calculus.hpp"
#include "koopman/classical_solver.hpp"
#include "koopman/presets.hpp"
#include "koopman/qcwe.hpp"
#include "koopman/runner.hpp"
#include "koopman/wigner.hpp"

namespace {

using namespace koopman;

GridPtr bench_grid(int n) {
  return make_grid(n, n, GridExtents{-8.0, 8.0, -8.0, 8.0}, 1.0);
}

ComplexField bench_state(const GridPtr& g) {
  return ComplexField::from_function(g, [](double q, double p) {
    return std::complex<double>(std::exp(-0.5 * (q * q + p * p)), 0.0) /
           std::sqrt(std::numbers::pi);
  });
}

void BM_SpectralGradient(benchmark::State& state) {
  auto g = bench_grid(static_cast<int>(state.range(0)));
  ComplexField f = bench_state(g);
  for (auto _ : state) {
    ComplexField dq = partial_q(f);
    benchmark::DoNotOptimize(dq.data());
  }
  state.SetItemsProcessed(state.iterations() * g->size());
}
BENCHMARK(BM_SpectralGradient)->Arg(128)->Arg(256);

void BM_PhaseAwareRhs(benchmark::State& state) {
  auto g = bench_grid(static_cast<int>(state.range(0)));
  auto h = HamiltonianFunction::quadratic({0.5, 0.5, 0.0, 0.0, 0.0, 0.0});
  ClassicalSolver solver(g, h, ClassicalModel::kvh);
  ComplexField chi = bench_state(g);
  for (auto _ : state) {
    ComplexField out = solver.rhs(chi);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * g->size());
}
BENCHMARK(BM_PhaseAwareRhs)->Arg(128)->Arg(256);

void BM_HybridRhs(benchmark::State& state) {
  auto g = bench_grid(static_cast<int>(state.range(0)));
  ExperimentConfig cfg = preset_config("figure1");
  HybridHamiltonian h = hybrid_hamiltonian_from(cfg, g);
  QcweSolver solver(g, h);
  HybridWavefunction psi(g, 2);
  psi.component(0) = bench_state(g);
  psi.component(1) = bench_state(g);
  for (auto _ : state) {
    HybridWavefunction out = solver.rhs(psi);
    benchmark::DoNotOptimize(out.component(0).data());
  }
  state.SetItemsProcessed(state.iterations() * g->size() * 2);
}
BENCHMARK(BM_HybridRhs)->Arg(128)->Arg(256);

void BM_WignerBuild(benchmark::State& state) {
  auto g = bench_grid(128);
  const int levels = static_cast<int>(state.range(0));
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(levels, levels);
  for (int n = 0; n < levels; ++n) rho(n, n) = std::pow(0.5, n + 1);
  rho /= rho.trace();
  for (auto _ : state) {
    WignerField w = wigner_from_density(rho, g);
    benchmark::DoNotOptimize(w.w.data());
  }
  state.SetItemsProcessed(state.iterations() * g->size());
}
BENCHMARK(BM_WignerBuild)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
