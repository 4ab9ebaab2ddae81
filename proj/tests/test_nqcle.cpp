#include <doctest.h>

#include "koopman/density_field.hpp"
#include "koopman/nqcle.hpp"
#include "koopman/observables.hpp"
#include "test_helpers.hpp"

using namespace koopman;

namespace {

Eigen::Matrix2cd sigma_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd sigma_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

HybridHamiltonian figure_hamiltonian() {
  return HybridHamiltonian::diagonal_family(
      HamiltonianFunction::quadratic({0.5, 0.5, 0, 0, 0, 0}),
      HamiltonianFunction::quadratic({0.25, -0.25, 0, 0, 0, 0.5}), sigma_z());
}

// H0(q,p) * I + (1/2) sigma_x with no phase-space dependence in the matrix
// part: the field factorizes into advected density times rotating spin.
HybridHamiltonian uncoupled_hamiltonian(double h0_scale = 1.0) {
  std::vector<HybridTerm> terms;
  terms.push_back(
      {HamiltonianFunction::quadratic({0.5 * h0_scale, 0.5 * h0_scale, 0, 0, 0, 0}),
       Eigen::Matrix2cd::Identity()});
  terms.push_back(
      {HamiltonianFunction::quadratic({0, 0, 0, 0, 0, 0.5}), sigma_x()});
  return HybridHamiltonian::from_terms(std::move(terms));
}

MatrixField initial_field(const GridPtr& g, cplx a0, cplx a1, double cq = 0.0) {
  HybridWavefunction psi(g, 2);
  psi.component(0) = ComplexField::from_function(
      g, [=](double q, double p) { return a0 * kt::gauss(q, p, cq); });
  psi.component(1) = ComplexField::from_function(
      g, [=](double q, double p) { return a1 * kt::gauss(q, p, cq); });
  return density_from_wavefunction(psi);
}

}  // namespace

TEST_CASE("density field from a wavefunction is the pointwise dyad") {
  auto g = kt::grid64();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  MatrixField p = initial_field(g, inv_sqrt2, cplx(0, inv_sqrt2));
  const std::size_t i = g->index(32, 36);
  const double d = std::norm(kt::gauss(g->q(32), g->p(36)));
  CHECK(std::abs(p.entry(i, 0, 0) - cplx(0.5 * d, 0)) < 1e-14);
  CHECK(std::abs(p.entry(i, 1, 1) - cplx(0.5 * d, 0)) < 1e-14);
  CHECK(std::abs(p.entry(i, 0, 1) - cplx(0, -0.5 * d)) < 1e-14);
  CHECK(p.max_hermiticity_defect() < 1e-16);
}

TEST_CASE("mean flow recovers the Hamiltonian velocity field") {
  auto g = kt::grid64();
  const auto h = uncoupled_hamiltonian();
  MatrixField p = initial_field(g, 1.0, 0.0);
  MeanFlow flow = mean_flow(p, h);
  double err = 0.0;
  const RealField rho = p.trace_real();
  for (int iq = 0; iq < 64; ++iq)
    for (int ip = 0; ip < 64; ++ip) {
      const std::size_t i = g->index(iq, ip);
      if (rho[i] <= flow.floor) continue;  // velocity damped in the far tail
      err = std::max(err, std::abs(flow.vq[i] - g->p(ip)));
      err = std::max(err, std::abs(flow.vp[i] + g->q(iq)));
    }
  CHECK(err < 1e-10);
  CHECK(flow.floored_nodes > 0);
}

TEST_CASE("field energy matches the term-wise closed form") {
  auto g = kt::grid64();
  const auto h = uncoupled_hamiltonian();
  // z+ spin at the origin: <sigma_x> = 0 and E = E[H0] = 1/2 for the unit
  // Gaussian (E[q^2] = E[p^2] = 1/2)
  MatrixField p = initial_field(g, 1.0, 0.0);
  CHECK(density_field_energy(p, h) == doctest::Approx(0.5).epsilon(1e-10));
  // x+ spin: <sigma_x> = 1 adds the constant 1/2
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  MatrixField px = initial_field(g, inv_sqrt2, inv_sqrt2);
  CHECK(density_field_energy(px, h) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("pure commutator limit rotates the spin pointwise") {
  auto g = kt::grid64();
  const auto h = uncoupled_hamiltonian(0.0);  // no flow, constant matrix
  NqcleSolver solver(g, h);
  MatrixField p = initial_field(g, 1.0, 0.0);
  const double dt = 2e-3, t = 1.0;
  for (int s = 0; s < 500; ++s) p = solver.step(p, dt);
  // exp(-i t sigma_x / 2) diag(1,0) exp(+i t sigma_x / 2)
  const double c = std::cos(0.5 * t), s = std::sin(0.5 * t);
  double err = 0.0;
  for (int iq = 20; iq < 44; ++iq)
    for (int ip = 20; ip < 44; ++ip) {
      const std::size_t i = g->index(iq, ip);
      const double d = std::norm(kt::gauss(g->q(iq), g->p(ip)));
      err = std::max(err, std::abs(p.entry(i, 0, 0) - cplx(c * c * d, 0)));
      err = std::max(err, std::abs(p.entry(i, 1, 1) - cplx(s * s * d, 0)));
      err = std::max(err, std::abs(p.entry(i, 0, 1) - cplx(0, c * s * d)));
    }
  CHECK(err < 1e-9);
}

TEST_CASE("mass and energy invariants hold under both divergence schemes") {
  auto g = kt::grid64();
  const auto h = figure_hamiltonian();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (auto scheme : {DivergenceScheme::spectral, DivergenceScheme::upwind}) {
    NqcleOptions opts;
    opts.divergence = scheme;
    NqcleSolver solver(g, h, opts);
    MatrixField p = initial_field(g, inv_sqrt2, inv_sqrt2);
    const double m0 = integrate(p.trace_real());
    const double e0 = density_field_energy(p, h);
    for (int s = 0; s < 200; ++s) p = solver.step(p, 1e-3);
    CHECK(std::abs(integrate(p.trace_real()) - m0) < 1e-12);
    if (scheme == DivergenceScheme::spectral)
      CHECK(std::abs(density_field_energy(p, h) - e0) < 1e-9);
    CHECK(p.max_hermiticity_defect() < 1e-15);
    CHECK(solver.last_hermiticity_drift() < 1e-12);
  }
}

TEST_CASE("factorized reference for a state-independent matrix part") {
  auto g = kt::grid64();
  const auto h = uncoupled_hamiltonian();
  NqcleSolver solver(g, h);
  MatrixField p = initial_field(g, 1.0, 0.0, 1.0);  // blob centered q = 1
  const double dt = 1e-3, t = 0.3;
  for (int s = 0; s < 300; ++s) p = solver.step(p, dt);

  const double c = std::cos(0.5 * t), s = std::sin(0.5 * t);
  double err = 0.0;
  for (int iq = 0; iq < 64; ++iq)
    for (int ip = 0; ip < 64; ++ip) {
      const double q = g->q(iq), pp = g->p(ip);
      const double qb = q * std::cos(t) - pp * std::sin(t);
      const double pb = pp * std::cos(t) + q * std::sin(t);
      const double d = std::norm(kt::gauss(qb, pb, 1.0));
      const std::size_t i = g->index(iq, ip);
      err = std::max(err, std::abs(p.entry(i, 0, 0) - cplx(c * c * d, 0)));
      err = std::max(err, std::abs(p.entry(i, 1, 1) - cplx(s * s * d, 0)));
      err = std::max(err, std::abs(p.entry(i, 0, 1) - cplx(0, c * s * d)));
    }
  CHECK(err < 1e-7);
}

TEST_CASE("state-dependent correction hook feeds the generator") {
  auto g = kt::grid64();
  const auto h = figure_hamiltonian();
  // Spin-up state: its density does not commute with a sigma_x correction.
  MatrixField p0 = initial_field(g, 1.0, 0.0);

  NqcleSolver bare(g, h);

  // identity-valued correction commutes and adds no flow: same evolution
  NqcleOptions ident;
  ident.correction = [](const MatrixField& f) {
    MatrixField c(f.grid(), f.dim());
    for (std::size_t i = 0; i < c.nodes(); ++i) {
      c.entry(i, 0, 0) = 0.3;
      c.entry(i, 1, 1) = 0.3;
    }
    return c;
  };
  NqcleSolver shifted(g, h, ident);
  MatrixField ra = bare.rhs(p0), rb = shifted.rhs(p0);
  double d = 0.0;
  for (std::size_t i = 0; i < ra.data().size(); ++i)
    d = std::max(d, std::abs(ra.data()[i] - rb.data()[i]));
  CHECK(d < 1e-11);

  // a sigma_x-valued correction must change the evolution
  NqcleOptions active;
  active.correction = [](const MatrixField& f) {
    MatrixField c(f.grid(), f.dim());
    for (std::size_t i = 0; i < c.nodes(); ++i) {
      c.entry(i, 0, 1) = 0.3;
      c.entry(i, 1, 0) = 0.3;
    }
    return c;
  };
  NqcleSolver driven(g, h, active);
  MatrixField rc = driven.rhs(p0);
  double dd = 0.0;
  for (std::size_t i = 0; i < ra.data().size(); ++i)
    dd = std::max(dd, std::abs(ra.data()[i] - rc.data()[i]));
  CHECK(dd > 1e-6);
  // mass stays conserved with the correction active
  MatrixField p = p0;
  const double m0 = integrate(p.trace_real());
  for (int s = 0; s < 50; ++s) p = driven.step(p, 1e-3);
  CHECK(std::abs(integrate(p.trace_real()) - m0) < 1e-12);
}

TEST_CASE("quantum-sector reduction of the field stays positive") {
  auto g = kt::grid64();
  const auto h = figure_hamiltonian();
  NqcleSolver solver(g, h);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  MatrixField p = initial_field(g, inv_sqrt2, inv_sqrt2);
  for (int s = 0; s < 200; ++s) p = solver.step(p, 1e-3);
  Eigen::Matrix2cd rho;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) rho(j, k) = integrate(p.entry_field(j, k));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
  CHECK(es.eigenvalues().minCoeff() > -1e-10);
  // the spin mixes under the coupled flow, so purity must drop
  CHECK(bloch_observables(rho).purity < 1.0 - 1e-4);
}

TEST_CASE("advective bound guards the step") {
  auto g = kt::grid64();
  NqcleSolver solver(g, figure_hamiltonian());
  MatrixField p = initial_field(g, 1.0, 0.0);
  CHECK_THROWS_AS((void)solver.step(p, solver.max_dt(p) * 1.5), NumericalAbort);
}
