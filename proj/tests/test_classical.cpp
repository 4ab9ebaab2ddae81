#include <doctest.h>

#include "koopman/characteristics.hpp"
#include "koopman/classical_solver.hpp"
#include "test_helpers.hpp"

using namespace koopman;

namespace {

const QuadraticCoeffs kOsc{0.5, 0.5, 0, 0, 0, 0};

double rel_l2(const ComplexField& a, const ComplexField& b) {
  ComplexField d = a;
  d -= b;
  return l2_norm(d) / l2_norm(b);
}

}  // namespace

TEST_CASE("phase-generator coefficients of a quadratic") {
  const QuadraticCoeffs h{1.5, 0.25, 0.7, -2.0, 3.0, 4.0};
  // p dH/dp - H = b p^2 - a q^2 - d q - f; cross and e terms cancel
  CHECK(h.lagrangian(2.0, 3.0) ==
        doctest::Approx(0.25 * 9 - 1.5 * 4 + 2.0 * 2 - 4.0));
  CHECK(h.dq(2.0, 3.0) == doctest::Approx(2 * 1.5 * 2 + 0.7 * 3 - 2.0));
  CHECK(h.dp(2.0, 3.0) == doctest::Approx(2 * 0.25 * 3 + 0.7 * 2 + 3.0));
}

TEST_CASE("affine flow: harmonic rotation") {
  AffineFlow flow(kOsc);
  const double t = 0.9;
  auto z = flow.apply(t, 1.0, 0.0);
  CHECK(z[0] == doctest::Approx(std::cos(t)).epsilon(1e-14));
  CHECK(z[1] == doctest::Approx(-std::sin(t)).epsilon(1e-14));
}

TEST_CASE("affine flow: free shear and hyperbolic stretch") {
  AffineFlow free({0, 0.5, 0, 0, 0, 0});
  auto z = free.apply(2.0, 1.0, 3.0);
  CHECK(z[0] == doctest::Approx(1.0 + 2.0 * 3.0));
  CHECK(z[1] == doctest::Approx(3.0));

  AffineFlow hyp({0, 0, 1.0, 0, 0, 0});  // H = qp: q e^t, p e^-t
  auto w = hyp.apply(0.5, 2.0, 3.0);
  CHECK(w[0] == doctest::Approx(2.0 * std::exp(0.5)).epsilon(1e-13));
  CHECK(w[1] == doctest::Approx(3.0 * std::exp(-0.5)).epsilon(1e-13));
}

TEST_CASE("affine flow: linear drive displaces the center") {
  AffineFlow drive({0, 0.5, 0, 1.0, 0, 0});  // H = p^2/2 + q
  // qdot = p, pdot = -1: q(t) = q0 + p0 t - t^2/2, p(t) = p0 - t
  auto z = drive.apply(2.0, 0.0, 0.0);
  CHECK(z[0] == doctest::Approx(-2.0).epsilon(1e-13));
  CHECK(z[1] == doctest::Approx(-2.0).epsilon(1e-13));
}

TEST_CASE("characteristics solution carries the frozen reference value") {
  // Oscillator, Gaussian initially centered at (1.0, 0.5), t = 0.7,
  // evaluated at the node (0.5, 0.25).  Reference value computed with an
  // independent integrator (exact backward flow + 96-node Gauss-Legendre
  // action quadrature).
  auto g = kt::grid64();
  auto chi0 = [](double q, double p) { return kt::gauss(q, p, 1.0, 0.5); };
  auto chi = characteristics_solution(chi0, HamiltonianFunction::quadratic(kOsc),
                                      0.7, g, ClassicalModel::kvh);
  const int iq = 34, ip = 33;
  REQUIRE(g->q(iq) == doctest::Approx(0.5));
  REQUIRE(g->p(ip) == doctest::Approx(0.25));
  const cplx want(0.41661000673316684, 0.002368077390981554);
  CHECK(std::abs(chi.at(iq, ip) - want) < 1e-12);

  auto chin = characteristics_solution(chi0, HamiltonianFunction::quadratic(kOsc),
                                       0.7, g, ClassicalModel::kvn);
  CHECK(chin.at(iq, ip).real() == doctest::Approx(0.41661673694264734).epsilon(1e-12));
  CHECK(chin.at(iq, ip).imag() == 0.0);
}

TEST_CASE("rk4 solver tracks the characteristics oracle") {
  auto g = kt::grid64();
  const auto h = HamiltonianFunction::quadratic(kOsc);
  ClassicalSolver solver(g, h, ClassicalModel::kvh);
  auto chi0 = [](double q, double p) { return kt::gauss(q, p, 1.0, 0.0); };
  ComplexField chi = ComplexField::from_function(g, chi0);
  const double dt = 1e-3;
  for (int s = 0; s < 500; ++s) chi = solver.step(chi, dt);
  auto ref = characteristics_solution(chi0, h, 0.5, g, ClassicalModel::kvh);
  CHECK(rel_l2(chi, ref) < 1e-7);
}

TEST_CASE("rk4 error falls sixteen-fold when dt halves") {
  auto g = kt::grid64();
  const auto h = HamiltonianFunction::quadratic(kOsc);
  ClassicalSolver solver(g, h, ClassicalModel::kvh);
  auto chi0 = [](double q, double p) { return kt::gauss(q, p, 1.0, 0.0); };
  auto ref = characteristics_solution(chi0, h, 0.4, g, ClassicalModel::kvh);
  auto err = [&](double dt, int n) {
    ComplexField chi = ComplexField::from_function(g, chi0);
    for (int s = 0; s < n; ++s) chi = solver.step(chi, dt);
    return rel_l2(chi, ref);
  };
  const double e1 = err(4e-3, 100), e2 = err(2e-3, 200);
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("norm is conserved to round-off") {
  auto g = kt::grid64();
  ClassicalSolver solver(g, HamiltonianFunction::quadratic(kOsc),
                         ClassicalModel::kvh);
  ComplexField chi = kt::gauss_field(g, 1.0, 0.0);
  const double n0 = norm2(chi);
  for (int s = 0; s < 1000; ++s) chi = solver.step(chi, 1e-3);
  CHECK(std::abs(norm2(chi) - n0) < 1e-12);
}

TEST_CASE("the two classical models differ exactly by the phase term") {
  auto g = kt::grid64();
  const auto h = HamiltonianFunction::quadratic({0.5, 0.5, 0, 0.3, -0.2, 0.1});
  ClassicalSolver kvh(g, h, ClassicalModel::kvh);
  ClassicalSolver kvn(g, h, ClassicalModel::kvn);
  auto chi = kt::gauss_field(g, 0.5, -0.5);

  ComplexField diff = kvh.rhs(chi);
  diff -= kvn.rhs(chi);
  RealField lag = h.lagrangian(g);
  ComplexField want = chi;
  want.multiply_pointwise(lag);
  want *= cplx(0.0, 1.0 / g->hbar());
  CHECK(kt::max_abs_diff(diff, want) < 1e-13);
}

TEST_CASE("a vanishing phase generator collapses kvh onto kvn bitwise") {
  // H = e p + c qp has p dH/dp - H = 0 identically.
  auto g = kt::grid64();
  const auto h = HamiltonianFunction::quadratic({0, 0, 0.4, 0, 1.0, 0});
  ClassicalSolver kvh(g, h, ClassicalModel::kvh);
  ClassicalSolver kvn(g, h, ClassicalModel::kvn);
  ComplexField a = kt::gauss_field(g);
  ComplexField b = a;
  for (int s = 0; s < 50; ++s) {
    a = kvh.step(a, 1e-3);
    b = kvn.step(b, 1e-3);
  }
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++mismatches;
  CHECK(mismatches == 0);
}

TEST_CASE("step aborts when dt violates the advective bound") {
  auto g = kt::grid64();
  ClassicalSolver solver(g, HamiltonianFunction::quadratic(kOsc),
                         ClassicalModel::kvh);
  ComplexField chi = kt::gauss_field(g);
  const double bad_dt = solver.max_dt() * 1.5;
  CHECK_THROWS_AS((void)solver.step(chi, bad_dt), NumericalAbort);
  try {
    (void)solver.step(chi, bad_dt);
  } catch (const NumericalAbort& e) {
    CHECK(e.record().invariant == "cfl");
    CHECK(e.record().value == doctest::Approx(bad_dt));
    CHECK(e.record().limit == doctest::Approx(solver.max_dt()));
  }
}

TEST_CASE("oscillator evolution is 2*pi periodic") {
  auto g = kt::grid64();
  ClassicalSolver solver(g, HamiltonianFunction::quadratic(kOsc),
                         ClassicalModel::kvh);
  ComplexField chi0 = kt::gauss_field(g, 1.0, 0.0);
  ComplexField chi = chi0;
  const double period = 2.0 * std::numbers::pi;
  const int full = static_cast<int>(period / 1e-3);
  for (int s = 0; s < full; ++s) chi = solver.step(chi, 1e-3);
  chi = solver.step(chi, period - full * 1e-3);
  CHECK(rel_l2(chi, chi0) < 1e-6);
}

TEST_CASE("gauss-legendre rule integrates high-degree polynomials") {
  const auto& xs = gauss_legendre_nodes();
  const auto& ws = gauss_legendre_weights();
  double s0 = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s0 += ws[i];
    s2 += ws[i] * xs[i] * xs[i];
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}
