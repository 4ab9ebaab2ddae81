#pragma once

#include "koopman/hybrid_hamiltonian.hpp"
#include "koopman/hybrid_wavefunction.hpp"

namespace koopman {

// P_jk(q, p) = Y_j(q, p) conj(Y_k(q, p)): node-wise Hermitian, rank one,
// with Tr P = sum_j |Y_j|^2 >= 0.
MatrixField density_from_wavefunction(const HybridWavefunction& psi);

struct MeanFlow {
  RealField vq, vp;           // <X_H> = (Tr(d_p H P), -Tr(d_q H P)) / rho
  double floor;               // absolute density floor applied to rho
  std::size_t floored_nodes;  // nodes where the floor was active
};

// Density-weighted Hamiltonian flow.  The divisor rho = Tr P is floored in
// magnitude at eps_rel * max(rho), keeping its sign, so the velocity stays
// finite in the tails without flipping where rho rings slightly negative.
MeanFlow mean_flow(const MatrixField& p, const HybridHamiltonian& h,
                   double eps_rel = 1e-12);

// integral Tr(H(z) P(z)) dz
double density_field_energy(const MatrixField& p, const HybridHamiltonian& h);

}  // namespace koopman
