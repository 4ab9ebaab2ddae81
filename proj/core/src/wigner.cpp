#include "koopman/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace koopman {

WignerField wigner_from_density(const Eigen::MatrixXcd& rho_osc,
                                const GridPtr& grid) {
  if (rho_osc.rows() != rho_osc.cols())
    throw std::invalid_argument("square density matrix required");
  const int levels = static_cast<int>(rho_osc.rows());
  const double hbar = grid->hbar();
  const double pref = 1.0 / (std::numbers::pi * hbar);

  RealField w(grid);
  for (int iq = 0; iq < grid->nq(); ++iq) {
    const double q = grid->q(iq);
    for (int ip = 0; ip < grid->np(); ++ip) {
      const double p = grid->p(ip);
      const double s = 2.0 * (q * q + p * p) / hbar;
      const cplx ubar = std::sqrt(2.0 / hbar) * cplx(q, -p);
      const double esh = std::exp(-0.5 * s);

      double acc = 0.0;
      cplx pow_u = 1.0;     // ubar^alpha
      double d_head = 1.0;  // 1/sqrt(alpha!)
      for (int alpha = 0; alpha < levels; ++alpha) {
        if (alpha > 0) {
          pow_u *= ubar;
          d_head /= std::sqrt(double(alpha));
        }
        // Scaled Laguerre recurrence: M_n = L_n^alpha(s) e^{-s/2}.
        double m_prev = 0.0, m_cur = esh;
        double d = d_head;  // sqrt(n!/(n+alpha)!)
        double sign = 1.0;  // (-1)^n
        for (int n = 0; n + alpha < levels; ++n) {
          if (n > 0) {
            const double m_next =
                ((2.0 * (n - 1) + 1.0 + alpha - s) * m_cur -
                 (n - 1.0 + alpha) * m_prev) /
                double(n);
            m_prev = m_cur;
            m_cur = m_next;
            d *= std::sqrt(double(n) / double(n + alpha));
            sign = -sign;
          }
          const int m = n + alpha;
          if (alpha == 0) {
            acc += rho_osc(n, n).real() * pref * sign * d * m_cur;
          } else {
            const cplx kernel = pref * sign * d * pow_u * m_cur;
            acc += 2.0 * (rho_osc(m, n) * kernel).real();
          }
        }
      }
      w.at(iq, ip) = acc;
    }
  }
  return {std::move(w), rho_osc.trace().real()};
}

bool wigner_resolves(const GridPtr& grid, int levels) {
  const double kmax = 2.0 * std::sqrt((2.0 * levels + 1.0) / grid->hbar());
  return std::numbers::pi / grid->dq() >= kmax &&
         std::numbers::pi / grid->dp() >= kmax;
}

}  // namespace koopman
