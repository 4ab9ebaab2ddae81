#pragma once

#include <Eigen/Dense>
#include <array>

#include "koopman/classical_density.hpp"
#include "koopman/classical_solver.hpp"
#include "koopman/hybrid_hamiltonian.hpp"
#include "koopman/hybrid_wavefunction.hpp"

namespace koopman {

// rho_jk = integral Y_j conj(Y_k); Hermitian positive semidefinite with
// trace equal to the total squared norm.  With normalize = true the result
// is scaled to unit trace (throws if the trace underflows).
Eigen::MatrixXcd quantum_density(const HybridWavefunction& psi,
                                 bool normalize = false);

// Component sum of the momentum-map extraction:
//   sum_j [ |Y_j|^2 + d_p(p |Y_j|^2) + 2 hbar Im(conj(d_q Y_j) d_p Y_j) ].
// Integrates to the total squared norm; sign-indefinite in general.
ClassicalDensityField hybrid_classical_density(const HybridWavefunction& psi);

// Plain modulus reading, sum_j |Y_j|^2; nonnegative by construction.
ClassicalDensityField hybrid_modulus_density(const HybridWavefunction& psi);

struct BlochObservables {
  double time = 0.0;
  std::array<double, 3> n{0.0, 0.0, 0.0};  // <sigma_x>, <sigma_y>, <sigma_z>
  double purity = 0.0;                     // Tr rho^2 = (|n|^2 + 1)/2
  double trace = 0.0;                      // Tr rho before normalization
};

// Two-level reduction of a density matrix; normalizes by the trace so the
// Bloch vector is insensitive to overall norm drift.  Requires dim == 2.
BlochObservables bloch_observables(const Eigen::MatrixXcd& rho,
                                   double time = 0.0);

// Conserved energy of the hybrid wave equation, E = Re<psi| i hbar d_t psi>.
// The overload taking the precomputed time derivative avoids rebuilding the
// solver when the caller already stepped.
double hybrid_energy(const HybridWavefunction& psi,
                     const HybridWavefunction& dpsi_dt, double hbar);
double hybrid_energy(const HybridWavefunction& psi,
                     const HybridHamiltonian& h);

// Classical energy functional integral rho_c * H for a scalar field, using
// the momentum-map extraction matching the wave-model phase convention.
double classical_energy(const ComplexField& chi, const HamiltonianFunction& h,
                        ClassicalModel model);

}  // namespace koopman
