#pragma once

#include <Eigen/Dense>

#include "koopman/hybrid_hamiltonian.hpp"

namespace koopman {

// Dense operators on the truncated number basis |0..levels-1>.
Eigen::MatrixXcd ladder_lowering(int levels);
Eigen::MatrixXcd position_operator(int levels, double hbar);
Eigen::MatrixXcd momentum_operator(int levels, double hbar);

// Symmetric (Weyl) quantization of a quadratic phase-space function:
// q p -> (QP + PQ)/2, everything else literal.
Eigen::MatrixXcd weyl_quantize(const QuadraticCoeffs& c, int levels,
                               double hbar);

// sum_a weyl_quantize(f_a) (x) C_a on C^levels (x) C^n, flat index m*n + j.
// Every term must be quadratic.
Eigen::MatrixXcd composite_hamiltonian(const HybridHamiltonian& h, int levels,
                                       double hbar);

// exp(-i H t / hbar) applied through a cached eigendecomposition; exact for
// the truncated operator at any t.
class QuantumPropagator {
 public:
  QuantumPropagator(const Eigen::MatrixXcd& h, double hbar);

  Eigen::VectorXcd evolve(const Eigen::VectorXcd& psi0, double t) const;
  const Eigen::VectorXd& eigenvalues() const { return eigs_; }

 private:
  double hbar_;
  Eigen::VectorXd eigs_;
  Eigen::MatrixXcd vecs_;
};

// Partial traces of |psi><psi| over the flat index m*n + j.
Eigen::MatrixXcd spin_reduced_density(const Eigen::VectorXcd& psi, int dim);
Eigen::MatrixXcd oscillator_reduced_density(const Eigen::VectorXcd& psi,
                                            int dim);

// Population in the highest `guard_levels` oscillator levels: the truncation
// error proxy.  require_truncation_tail throws NumericalAbort beyond limit.
double truncation_tail(const Eigen::VectorXcd& psi, int dim,
                       int guard_levels = 4);
void require_truncation_tail(const Eigen::VectorXcd& psi, int dim,
                             double limit, double time,
                             int guard_levels = 4);

// |0> (x) spin, flat index convention as above.
Eigen::VectorXcd ground_state_product(int levels, const Eigen::VectorXcd& spin);

}  // namespace koopman
