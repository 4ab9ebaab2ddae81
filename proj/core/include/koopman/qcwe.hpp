#pragma once

#include "koopman/classical_solver.hpp"
#include "koopman/hybrid_hamiltonian.hpp"
#include "koopman/hybrid_wavefunction.hpp"

namespace koopman {

// Hybrid wave equation, component form:
//   d_t Y_j = sum_k [ {H_jk, Y_k} + (i/hbar)(p d_p H_jk - H_jk) Y_k ]
// evaluated term-by-term over the f_alpha * C_alpha decomposition, so each
// component's derivatives are taken once per rhs regardless of term count.
class QcweSolver {
 public:
  QcweSolver(GridPtr grid, HybridHamiltonian h, StepControl control = {});

  const HybridHamiltonian& hamiltonian() const { return h_; }
  const GridPtr& grid() const { return grid_; }

  HybridWavefunction rhs(const HybridWavefunction& psi) const;
  HybridWavefunction step(const HybridWavefunction& psi, double dt) const;

  double max_flow_speed() const { return vmax_; }
  double max_dt() const;

 private:
  GridPtr grid_;
  HybridHamiltonian h_;
  StepControl control_;
  struct TermFields {
    RealField dq, dp, lagrangian;
    bool identity_matrix;
  };
  std::vector<TermFields> term_fields_;
  double vmax_;
};

HybridWavefunction qcwe_rhs(const HybridWavefunction& psi,
                            const HybridHamiltonian& h);
HybridWavefunction qcwe_step(const HybridWavefunction& psi,
                             const HybridHamiltonian& h, double dt,
                             StepControl control = {});

// Exact propagation for diagonal-family Hamiltonians: rotate into the
// eigenbasis of Sigma, solve each scalar channel H0 + lambda_j * HI by
// characteristics, rotate back.  Initial components must be closed forms.
HybridWavefunction diagonal_channel_solve(
    const std::vector<std::function<cplx(double, double)>>& psi0,
    const HybridHamiltonian& h, double t, const GridPtr& grid);

}  // namespace koopman
