#include "koopman/classical_density.hpp"

namespace koopman {

namespace detail {

void add_momentum_map_corrections(const ComplexField& chi, RealField& acc) {
  const auto& grid = chi.grid();
  const auto& g = *grid;

  RealField p_abs2(grid);
  for (int iq = 0; iq < g.nq(); ++iq)
    for (int ip = 0; ip < g.np(); ++ip) {
      const std::size_t i = g.index(iq, ip);
      p_abs2[i] = g.p(ip) * std::norm(chi[i]);
    }
  RealField momentum_term = partial_p(p_abs2);

  // hbar Im{conj(chi), chi} = 2 hbar Im(conj(d_q chi) d_p chi)
  ComplexField cq = partial_q(chi);
  ComplexField cp = partial_p(chi);
  const double hbar = g.hbar();
  for (std::size_t i = 0; i < acc.size(); ++i)
    acc[i] += momentum_term[i] +
              2.0 * hbar * std::imag(std::conj(cq[i]) * cp[i]);
}

}  // namespace detail

ClassicalDensityField kvn_density(const ComplexField& chi) {
  return {abs2(chi), DensityProvenance::kvn};
}

ClassicalDensityField kvh_classical_density(const ComplexField& chi) {
  RealField rho = abs2(chi);
  detail::add_momentum_map_corrections(chi, rho);
  return {std::move(rho), DensityProvenance::kvh_momentum_map};
}

}  // namespace koopman
