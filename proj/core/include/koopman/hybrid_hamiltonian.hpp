#pragma once

#include <Eigen/Dense>
#include <vector>

#include "koopman/hamiltonian.hpp"

namespace koopman {

// One summand of an operator-valued Hamiltonian: f(q, p) * C with f real and
// C a constant Hermitian matrix.  Every Hermitian matrix function decomposes
// this way, and it keeps all scalar machinery (analytic derivatives, exact
// flows) reusable per term.
struct HybridTerm {
  HamiltonianFunction fn;
  Eigen::MatrixXcd mat;
};

class HybridHamiltonian {
 public:
  static HybridHamiltonian scalar(HamiltonianFunction h);  // n = 1
  static HybridHamiltonian from_terms(std::vector<HybridTerm> terms);
  // H0 * identity + HI * Sigma; enables the exact per-channel solver.
  static HybridHamiltonian diagonal_family(HamiltonianFunction h0,
                                           HamiltonianFunction h_i,
                                           const Eigen::MatrixXcd& sigma);

  int dim() const { return dim_; }
  const std::vector<HybridTerm>& terms() const { return terms_; }

  // Entry-wise data. H(q, p) as a dense matrix; requires evaluable terms.
  Eigen::MatrixXcd value(double q, double p) const;
  Eigen::MatrixXcd d_dq(double q, double p) const;
  Eigen::MatrixXcd d_dp(double q, double p) const;

  // Largest Hermiticity defect among the constant matrices.
  double hermiticity_defect() const;

  // Diagonal-basis structure (set only via diagonal_family).
  bool has_diagonal_basis() const { return diagonal_; }
  const HamiltonianFunction& h0() const;
  const HamiltonianFunction& h_interaction() const;
  const Eigen::MatrixXcd& sigma() const;
  const Eigen::VectorXd& sigma_eigenvalues() const;
  const Eigen::MatrixXcd& sigma_eigenvectors() const;  // columns, Sigma = U L U^+

  // max over nodes and matrix entries of |X_{H_jk}|, for CFL control.
  double max_flow_speed(const GridPtr& grid) const;

 private:
  HybridHamiltonian() = default;
  int dim_ = 0;
  std::vector<HybridTerm> terms_;
  bool diagonal_ = false;
  Eigen::VectorXd eigvals_;
  Eigen::MatrixXcd eigvecs_;
};

}  // namespace koopman
