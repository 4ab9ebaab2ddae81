#pragma once

#include <Eigen/Dense>

#include "koopman/hybrid_hamiltonian.hpp"

namespace koopman {

// Mean-field state: one classical phase-space point coupled to a normalized
// quantum amplitude vector.
struct EhrenfestState {
  double q = 0.0;
  double p = 0.0;
  Eigen::VectorXcd psi;

  EhrenfestState& axpy(double a, const EhrenfestState& o) {
    q += a * o.q;
    p += a * o.p;
    psi += a * o.psi;
    return *this;
  }
};

// Coupled mean-field equations
//   dq/dt =  <psi| d_p H(q,p) |psi>,
//   dp/dt = -<psi| d_q H(q,p) |psi>,
//   i hbar dpsi/dt = H(q,p) psi.
// Expectations are taken with the raw (unnormalized) amplitudes, matching
// the defining variational principle; keep |psi| = 1 initially.
class EhrenfestSolver {
 public:
  EhrenfestSolver(HybridHamiltonian h, double hbar);

  EhrenfestState rhs(const EhrenfestState& s) const;
  EhrenfestState step(const EhrenfestState& s, double dt) const;

  double energy(const EhrenfestState& s) const;  // <psi|H(q,p)|psi>
  Eigen::MatrixXcd density(const EhrenfestState& s) const;  // psi psi^dagger

 private:
  HybridHamiltonian h_;
  double hbar_;
};

}  // namespace koopman
