#pragma once

#include "koopman/calculus.hpp"

namespace koopman {

// Affine symplectomorphism z -> M z + t with det M = 1.
struct AffineSymplectic {
  double m11 = 1, m12 = 0, m21 = 0, m22 = 1;
  double tq = 0, tp = 0;

  double det() const { return m11 * m22 - m12 * m21; }
  std::array<double, 2> apply(double q, double p) const {
    return {m11 * q + m12 * p + tq, m21 * q + m22 * p + tp};
  }
  std::array<double, 2> apply_inverse(double q, double p) const {
    const double uq = q - tq, up = p - tp;
    return {m22 * uq - m12 * up, -m21 * uq + m11 * up};
  }
};

// Lifted transform (eta, phi): phi is the potential of the one-form defect
// theta - eta^* theta (theta = p dq), which is exact precisely when
// det M = 1.  The closed form below carries an additive constant phi0;
// composition accumulates these constants.
class VanHoveTransform {
 public:
  VanHoveTransform(AffineSymplectic eta, double phi0 = 0.0);

  static VanHoveTransform q_translation(double a);
  static VanHoveTransform p_translation(double b);
  static VanHoveTransform rotation(double alpha);
  static VanHoveTransform shear(double lambda);  // (q, p) -> (q + lambda p, p)

  const AffineSymplectic& eta() const { return eta_; }
  double phi0() const { return phi0_; }
  double phase(double q, double p) const;
  std::array<double, 2> grad_phase(double q, double p) const;

 private:
  AffineSymplectic eta_;
  double phi0_;
};

// Group law: (apply g2 after g1), phi = phi1 + phi2 o eta1.
VanHoveTransform compose(const VanHoveTransform& g2, const VanHoveTransform& g1);
VanHoveTransform inverse(const VanHoveTransform& g);

// Max-norm residual of eta^* theta + d phi = theta over grid nodes.
double theta_defect_residual(const VanHoveTransform& g, const GridPtr& grid);

// (U_g chi)(z) = chi(eta^{-1} z) * exp(-i phi(eta^{-1} z) / hbar), with the
// pullback evaluated by trigonometric interpolation.
ComplexField van_hove_act(const ComplexField& chi, const VanHoveTransform& g);

}  // namespace koopman
