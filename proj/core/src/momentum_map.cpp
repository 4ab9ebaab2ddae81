#include "koopman/momentum_map.hpp"

namespace koopman {

double momentum_map_pairing_residual(const ComplexField& chi,
                                     const HamiltonianFunction& xi) {
  const ComplexField lifted = kvh_rhs(chi, xi);
  const double lhs = 2.0 * chi.grid()->hbar() * std::imag(inner(lifted, chi));

  const ClassicalDensityField rho = kvh_classical_density(chi);
  const RealField xi_values = xi.values(chi.grid());
  detail::KahanSum pairing;
  for (std::size_t i = 0; i < rho.rho.size(); ++i)
    pairing.add(rho.rho[i] * xi_values[i]);
  const double rhs = 2.0 * pairing.value() * chi.grid()->cell();

  return std::abs(lhs - rhs);
}

}  // namespace koopman
