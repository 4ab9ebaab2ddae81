#include "koopman/observables.hpp"

#include <stdexcept>

#include "koopman/qcwe.hpp"

namespace koopman {

Eigen::MatrixXcd quantum_density(const HybridWavefunction& psi,
                                 bool normalize) {
  const int n = psi.dim();
  Eigen::MatrixXcd rho(n, n);
  for (int j = 0; j < n; ++j) {
    rho(j, j) = norm2(psi.component(j));
    for (int k = j + 1; k < n; ++k) {
      // rho_jk = integral Y_j conj(Y_k) = <Y_k|Y_j>
      rho(j, k) = inner(psi.component(k), psi.component(j));
      rho(k, j) = std::conj(rho(j, k));
    }
  }
  if (normalize) {
    const double tr = rho.real().trace();
    if (tr < 1e-300) throw std::domain_error("density matrix trace underflow");
    rho /= tr;
  }
  return rho;
}

ClassicalDensityField hybrid_classical_density(const HybridWavefunction& psi) {
  RealField rho(psi.grid());
  for (int j = 0; j < psi.dim(); ++j) {
    const RealField a2 = abs2(psi.component(j));
    for (std::size_t m = 0; m < rho.size(); ++m) rho[m] += a2[m];
    detail::add_momentum_map_corrections(psi.component(j), rho);
  }
  return {std::move(rho), DensityProvenance::hybrid_eq8};
}

ClassicalDensityField hybrid_modulus_density(const HybridWavefunction& psi) {
  RealField rho(psi.grid());
  for (int j = 0; j < psi.dim(); ++j) {
    const RealField a2 = abs2(psi.component(j));
    for (std::size_t m = 0; m < rho.size(); ++m) rho[m] += a2[m];
  }
  return {std::move(rho), DensityProvenance::kvn};
}

BlochObservables bloch_observables(const Eigen::MatrixXcd& rho, double time) {
  if (rho.rows() != 2 || rho.cols() != 2)
    throw std::invalid_argument("Bloch reduction requires a 2x2 matrix");
  BlochObservables out;
  out.time = time;
  out.trace = rho.real().trace();
  if (out.trace < 1e-300)
    throw std::domain_error("density matrix trace underflow");
  const Eigen::Matrix2cd r = rho / out.trace;
  out.n[0] = 2.0 * r(0, 1).real();
  out.n[1] = -2.0 * r(0, 1).imag();  // Tr(r sigma_y), sigma_y = [[0,-i],[i,0]]
  out.n[2] = (r(0, 0) - r(1, 1)).real();
  out.purity = (r * r).real().trace();
  return out;
}

double hybrid_energy(const HybridWavefunction& psi,
                     const HybridWavefunction& dpsi_dt, double hbar) {
  // Re<psi | i hbar dpsi_dt> = -hbar Im sum_j <psi_j | dpsi_dt_j>
  cplx acc = 0.0;
  for (int j = 0; j < psi.dim(); ++j)
    acc += inner(psi.component(j), dpsi_dt.component(j));
  return -hbar * acc.imag();
}

double hybrid_energy(const HybridWavefunction& psi,
                     const HybridHamiltonian& h) {
  return hybrid_energy(psi, qcwe_rhs(psi, h), psi.grid()->hbar());
}

double classical_energy(const ComplexField& chi, const HamiltonianFunction& h,
                        ClassicalModel model) {
  const ClassicalDensityField d = model == ClassicalModel::kvn
                                      ? kvn_density(chi)
                                      : kvh_classical_density(chi);
  RealField weighted = h.values(chi.grid());
  for (std::size_t m = 0; m < weighted.size(); ++m) weighted[m] *= d.rho[m];
  return integrate(weighted);
}

}  // namespace koopman
