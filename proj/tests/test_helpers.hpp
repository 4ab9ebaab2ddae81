#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "koopman/field.hpp"
#include "koopman/grid.hpp"

namespace kt {

using koopman::cplx;

inline koopman::GridPtr grid64(double hbar = 1.0) {
  return koopman::make_grid(64, 64, {-8.0, 8.0, -8.0, 8.0}, hbar);
}

inline koopman::GridPtr grid128(double hbar = 1.0) {
  return koopman::make_grid(128, 128, {-8.0, 8.0, -8.0, 8.0}, hbar);
}

// Unit-mass Gaussian wavefunction sqrt(exp(-((q-cq)^2+(p-cp)^2)/w^2)/pi)/w.
inline cplx gauss(double q, double p, double cq = 0.0, double cp = 0.0,
                  double w = 1.0) {
  const double r2 = (q - cq) * (q - cq) + (p - cp) * (p - cp);
  return {std::exp(-r2 / (2.0 * w * w)) / (w * std::sqrt(std::numbers::pi)),
          0.0};
}

inline koopman::ComplexField gauss_field(const koopman::GridPtr& g,
                                         double cq = 0.0, double cp = 0.0,
                                         double w = 1.0) {
  return koopman::ComplexField::from_function(g, [=](double q, double p) {
    return gauss(q, p, cq, cp, w);
  });
}

inline double max_abs_diff(const koopman::ComplexField& a,
                           const koopman::ComplexField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs_diff(const koopman::RealField& a,
                           const koopman::RealField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace kt
