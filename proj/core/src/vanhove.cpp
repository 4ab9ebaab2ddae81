#include "koopman/vanhove.hpp"

#include <cmath>

namespace koopman {

VanHoveTransform::VanHoveTransform(AffineSymplectic eta, double phi0)
    : eta_(eta), phi0_(phi0) {
  if (std::abs(eta.det() - 1.0) > 1e-12)
    throw std::invalid_argument("van Hove lift requires det M = 1");
}

VanHoveTransform VanHoveTransform::q_translation(double a) {
  return VanHoveTransform({1, 0, 0, 1, a, 0});
}

VanHoveTransform VanHoveTransform::p_translation(double b) {
  return VanHoveTransform({1, 0, 0, 1, 0, b});
}

VanHoveTransform VanHoveTransform::rotation(double alpha) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  return VanHoveTransform({c, s, -s, c, 0, 0});
}

VanHoveTransform VanHoveTransform::shear(double lambda) {
  return VanHoveTransform({1, lambda, 0, 1, 0, 0});
}

double VanHoveTransform::phase(double q, double p) const {
  const auto& e = eta_;
  return (1.0 - e.m11 * e.m22) * q * p - 0.5 * e.m11 * e.m21 * q * q -
         0.5 * e.m12 * e.m22 * p * p - e.m11 * e.tp * q - e.m12 * e.tp * p +
         phi0_;
}

std::array<double, 2> VanHoveTransform::grad_phase(double q, double p) const {
  const auto& e = eta_;
  return {(1.0 - e.m11 * e.m22) * p - e.m11 * e.m21 * q - e.m11 * e.tp,
          (1.0 - e.m11 * e.m22) * q - e.m12 * e.m22 * p - e.m12 * e.tp};
}

VanHoveTransform compose(const VanHoveTransform& g2, const VanHoveTransform& g1) {
  const auto& a = g2.eta();
  const auto& b = g1.eta();
  AffineSymplectic eta;
  eta.m11 = a.m11 * b.m11 + a.m12 * b.m21;
  eta.m12 = a.m11 * b.m12 + a.m12 * b.m22;
  eta.m21 = a.m21 * b.m11 + a.m22 * b.m21;
  eta.m22 = a.m21 * b.m12 + a.m22 * b.m22;
  const auto tb = a.apply(b.tq, b.tp);
  eta.tq = tb[0];
  eta.tp = tb[1];
  // phi = phi1 + phi2 o eta1; the canonical closed form for the composed map
  // already has the right gradient, so only the constant must be fixed.  The
  // canonical form vanishes at the origin, so phi0 is the desired value there.
  return VanHoveTransform(eta, g1.phase(0, 0) + g2.phase(b.tq, b.tp));
}

VanHoveTransform inverse(const VanHoveTransform& g) {
  const auto& e = g.eta();
  AffineSymplectic inv;
  inv.m11 = e.m22;
  inv.m12 = -e.m12;
  inv.m21 = -e.m21;
  inv.m22 = e.m11;
  inv.tq = -(inv.m11 * e.tq + inv.m12 * e.tp);
  inv.tp = -(inv.m21 * e.tq + inv.m22 * e.tp);
  // phi_inv = -phi o eta^{-1}, pinned at the origin.
  const auto z0 = inv.apply(0, 0);
  return VanHoveTransform(inv, -g.phase(z0[0], z0[1]));
}

double theta_defect_residual(const VanHoveTransform& g, const GridPtr& grid) {
  const auto& e = g.eta();
  double worst = 0.0;
  for (int iq = 0; iq < grid->nq(); ++iq) {
    const double q = grid->q(iq);
    for (int ip = 0; ip < grid->np(); ++ip) {
      const double p = grid->p(ip);
      const auto dphi = g.grad_phase(q, p);
      const double image_p = e.m21 * q + e.m22 * p + e.tp;
      // (eta^* theta)_q = p_image * m11, (eta^* theta)_p = p_image * m12.
      const double rq = image_p * e.m11 + dphi[0] - p;
      const double rp = image_p * e.m12 + dphi[1];
      worst = std::max(worst, std::abs(rq) + std::abs(rp));
    }
  }
  return worst;
}

ComplexField van_hove_act(const ComplexField& chi, const VanHoveTransform& g) {
  const FourierInterpolant interp(chi);
  const auto& grid = *chi.grid();
  const double inv_hbar = 1.0 / grid.hbar();
  ComplexField out(chi.grid());
  for (int iq = 0; iq < grid.nq(); ++iq) {
    const double q = grid.q(iq);
    for (int ip = 0; ip < grid.np(); ++ip) {
      const auto z0 = g.eta().apply_inverse(q, grid.p(ip));
      out.at(iq, ip) = interp(z0[0], z0[1]) *
                       std::polar(1.0, -g.phase(z0[0], z0[1]) * inv_hbar);
    }
  }
  return out;
}

}  // namespace koopman
