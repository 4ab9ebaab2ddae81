#pragma once

#include <functional>

#include "koopman/classical_solver.hpp"
#include "koopman/density_field.hpp"

namespace koopman {

enum class DivergenceScheme { spectral, upwind };

// Optional nonlinear gauge term: given the current density field P, return
// F(P); the effective Hamiltonian in the flow and commutator is H + hbar F.
using NonlinearCorrection = std::function<MatrixField(const MatrixField&)>;

struct NqcleOptions {
  StepControl control{};
  DivergenceScheme divergence = DivergenceScheme::spectral;
  double density_floor_rel = 1e-12;
  NonlinearCorrection correction{};  // empty = none
};

// Nonlinear density-field equation
//   d_t P = -div(P <X_Hcal>) - (i/hbar) [Hcal, P],
// with <X_A> = (Tr(d_p A P), -Tr(d_q A P)) / Tr P and Hcal = H + hbar F(P).
// The advection term moves every matrix entry with the shared density-mean
// flow, so Tr P is transported as a bona fide probability density; the
// commutator is traceless.  integral Tr P is conserved exactly and
// integral Tr(H P) is conserved when F = 0.
class NqcleSolver {
 public:
  NqcleSolver(GridPtr grid, HybridHamiltonian h, NqcleOptions opts = {});

  const HybridHamiltonian& hamiltonian() const { return h_; }
  const GridPtr& grid() const { return grid_; }

  MatrixField rhs(const MatrixField& p) const;
  // One rk4 stage followed by re-Hermitization; the removed defect is
  // recorded and readable through last_hermiticity_drift().
  MatrixField step(const MatrixField& p, double dt) const;

  // Advective stability bound for the flow generated by the current state.
  double max_dt(const MatrixField& p) const;
  double last_hermiticity_drift() const { return last_drift_; }

 private:
  GridPtr grid_;
  HybridHamiltonian h_;
  NqcleOptions opts_;
  struct TermFields {
    RealField values, dq, dp;
  };
  std::vector<TermFields> term_fields_;
  mutable double last_drift_ = 0.0;
};

}  // namespace koopman
