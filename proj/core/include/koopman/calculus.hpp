#pragma once

#include "koopman/field.hpp"

namespace koopman {

// Partial derivatives along q (outer axis) and p (inner axis), using the
// grid's configured scheme: FFT differentiation or 4th-order centered
// differences, both with periodic wrap.
ComplexField partial_q(const ComplexField& f);
ComplexField partial_p(const ComplexField& f);
RealField partial_q(const RealField& f);
RealField partial_p(const RealField& f);

// {f, g} = d_q f d_p g - d_p f d_q g
ComplexField poisson_bracket(const ComplexField& f, const ComplexField& g);

// Node sum times the cell area; for a smooth periodic (or decaying) field
// this is the trapezoid rule, which is spectrally accurate here.
// Compensated (Neumaier) summation throughout.
cplx integrate(const ComplexField& f);
double integrate(const RealField& f);
// <f|g> = integral conj(f) g
cplx inner(const ComplexField& f, const ComplexField& g);
double norm2(const ComplexField& f);  // integral |f|^2
double l2_norm(const ComplexField& f);
double l1_distance(const RealField& a, const RealField& b);

RealField abs2(const ComplexField& f);

// chi = sqrt(density) * exp(i*phase/hbar); phase defined where
// |chi| > threshold * max|chi| (mask = 1), zero elsewhere.
PolarDecomposition polar_decompose(const ComplexField& chi,
                                   double threshold = 1e-10);

// Fraction of |f|^2 mass in the frame of relative width `margin` along each
// edge, in either coordinate.  Pre: 0 < margin < 0.5.
double boundary_mass(const ComplexField& f, double margin = 0.1);
double boundary_mass(const RealField& f, double margin = 0.1);

// Trigonometric (FFT-coefficient) interpolation of a periodic grid field at
// arbitrary points; exact for band-limited data.
class FourierInterpolant {
 public:
  explicit FourierInterpolant(const ComplexField& f);
  cplx operator()(double q, double p) const;

 private:
  GridPtr grid_;
  std::vector<cplx> coef_;  // FFT(f)/N
};

namespace detail {
// Neumaier compensated accumulator.
struct KahanSum {
  double sum = 0.0, comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};
}  // namespace detail

}  // namespace koopman
