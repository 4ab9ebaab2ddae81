#include <doctest.h>

#include "koopman/calculus.hpp"
#include "test_helpers.hpp"

using namespace koopman;

namespace {
constexpr double kTau = 2.0 * std::numbers::pi;
}

TEST_CASE("spectral derivatives are exact on band-limited data") {
  auto g = kt::grid64();
  const double kq = 3.0 * kTau / 16.0;  // three periods across the box
  const double kp = 2.0 * kTau / 16.0;
  auto f = ComplexField::from_function(g, [&](double q, double p) {
    return cplx(std::sin(kq * q) * std::cos(kp * p), 0.0);
  });
  auto exact_q = ComplexField::from_function(g, [&](double q, double p) {
    return cplx(kq * std::cos(kq * q) * std::cos(kp * p), 0.0);
  });
  auto exact_p = ComplexField::from_function(g, [&](double q, double p) {
    return cplx(-kp * std::sin(kq * q) * std::sin(kp * p), 0.0);
  });
  CHECK(kt::max_abs_diff(partial_q(f), exact_q) < 1e-12);
  CHECK(kt::max_abs_diff(partial_p(f), exact_p) < 1e-12);
}

TEST_CASE("spectral derivatives of a Gaussian reach near round-off") {
  auto g = kt::grid64();
  auto f = kt::gauss_field(g);
  auto exact = ComplexField::from_function(g, [&](double q, double p) {
    return -q * kt::gauss(q, p);
  });
  CHECK(kt::max_abs_diff(partial_q(f), exact) < 1e-12);
}

TEST_CASE("spectral derivative of a real field has zero mean") {
  auto g = kt::grid64();
  RealField f = abs2(kt::gauss_field(g, 0.7, -0.4, 1.3));
  CHECK(std::abs(integrate(partial_q(f))) < 1e-15);
  CHECK(std::abs(integrate(partial_p(f))) < 1e-15);
}

TEST_CASE("centered-difference scheme converges at fourth order") {
  auto err = [](int n) {
    auto g = make_grid(n, n, {-8, 8, -8, 8}, 1.0, DerivativeScheme::central4);
    auto f = ComplexField::from_function(g, [](double q, double p) {
      return cplx(std::sin(kTau * q / 16.0) * std::cos(kTau * p / 16.0), 0.0);
    });
    auto exact = ComplexField::from_function(g, [](double q, double p) {
      return cplx(kTau / 16.0 * std::cos(kTau * q / 16.0) *
                      std::cos(kTau * p / 16.0),
                  0.0);
    });
    return kt::max_abs_diff(partial_q(f), exact);
  };
  const double e1 = err(32), e2 = err(64);
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("poisson bracket of two displaced Gaussians") {
  // f = exp(-(q^2+p^2)/2), g = exp(-((q-1)^2+p^2)/2): {f, g} = p f g
  auto g = kt::grid64();
  auto f1 = ComplexField::from_function(g, [](double q, double p) {
    return cplx(std::exp(-(q * q + p * p) / 2.0), 0.0);
  });
  auto f2 = ComplexField::from_function(g, [](double q, double p) {
    return cplx(std::exp(-((q - 1) * (q - 1) + p * p) / 2.0), 0.0);
  });
  auto exact = ComplexField::from_function(g, [](double q, double p) {
    return cplx(p * std::exp(-(q * q + p * p) / 2.0) *
                    std::exp(-((q - 1) * (q - 1) + p * p) / 2.0),
                0.0);
  });
  CHECK(kt::max_abs_diff(poisson_bracket(f1, f2), exact) < 1e-11);
}

TEST_CASE("fourier interpolant is exact off-grid for band-limited data") {
  auto g = kt::grid64();
  auto f = ComplexField::from_function(g, [](double q, double p) {
    return cplx(std::cos(kTau * q / 16.0), std::sin(2.0 * kTau * p / 16.0));
  });
  FourierInterpolant interp(f);
  const double q = 0.3141, p = -2.71;
  const cplx want(std::cos(kTau * q / 16.0), std::sin(2.0 * kTau * p / 16.0));
  CHECK(std::abs(interp(q, p) - want) < 1e-12);
  // and it reproduces node values
  CHECK(std::abs(interp(g->q(10), g->p(20)) - f.at(10, 20)) < 1e-12);
}

TEST_CASE("fourier interpolant on a Gaussian matches the closed form") {
  auto g = kt::grid128();
  auto f = kt::gauss_field(g, 0.5, -0.25);
  FourierInterpolant interp(f);
  CHECK(std::abs(interp(1.234, 0.777) - kt::gauss(1.234, 0.777, 0.5, -0.25)) <
        1e-12);
}

TEST_CASE("compensated summation survives cancellation") {
  detail::KahanSum s;
  s.add(1e16);
  s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 1.0);
}
