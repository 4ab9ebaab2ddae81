#include "koopman/density_field.hpp"

#include <algorithm>

#include "koopman/calculus.hpp"

namespace koopman {

MatrixField density_from_wavefunction(const HybridWavefunction& psi) {
  const int n = psi.dim();
  MatrixField out(psi.grid(), n);
  for (std::size_t m = 0; m < out.nodes(); ++m)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out.entry(m, j, k) =
            psi.component(j)[m] * std::conj(psi.component(k)[m]);
  return out;
}

MeanFlow mean_flow(const MatrixField& p, const HybridHamiltonian& h,
                   double eps_rel) {
  const GridPtr& grid = p.grid();
  if (p.dim() != h.dim()) throw MismatchError("density/Hamiltonian dims differ");

  const RealField rho = p.trace_real();
  const double floor = eps_rel * std::max(rho.max(), 0.0);

  MeanFlow out{RealField(grid), RealField(grid), floor, 0};

  // Numerators via the term decomposition: Tr(d H P) = sum_a d f_a Tr(C_a P).
  RealField num_q(grid), num_p(grid);
  for (const auto& term : h.terms()) {
    const RealField dq = term.fn.d_dq(grid);
    const RealField dp = term.fn.d_dp(grid);
    for (std::size_t m = 0; m < grid->size(); ++m) {
      const double tr = (term.mat.transpose().array() *
                         MatrixField::ConstMap(p.block(m), p.dim(), p.dim())
                             .array())
                            .sum()
                            .real();
      num_q[m] += dq[m] * tr;
      num_p[m] += dp[m] * tr;
    }
  }

  // The divisor keeps the sign of rho: clamping negative ringing up to
  // +floor would flip the flow there and amplify it by |rho|/floor.
  for (std::size_t m = 0; m < grid->size(); ++m) {
    double r = rho[m];
    if (std::abs(r) < floor) {
      r = r < 0.0 ? -floor : floor;
      ++out.floored_nodes;
    }
    if (r == 0.0) {
      out.vq[m] = 0.0;
      out.vp[m] = 0.0;
    } else {
      out.vq[m] = num_p[m] / r;
      out.vp[m] = -num_q[m] / r;
    }
  }
  return out;
}

double density_field_energy(const MatrixField& p, const HybridHamiltonian& h) {
  if (p.dim() != h.dim()) throw MismatchError("density/Hamiltonian dims differ");
  const GridPtr& grid = p.grid();
  RealField integrand(grid);
  for (const auto& term : h.terms()) {
    const RealField f = term.fn.values(grid);
    for (std::size_t m = 0; m < grid->size(); ++m) {
      const double tr = (term.mat.transpose().array() *
                         MatrixField::ConstMap(p.block(m), p.dim(), p.dim())
                             .array())
                            .sum()
                            .real();
      integrand[m] += f[m] * tr;
    }
  }
  return integrate(integrand);
}

}  // namespace koopman
