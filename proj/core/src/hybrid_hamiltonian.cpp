#include "koopman/hybrid_hamiltonian.hpp"

namespace koopman {

HybridHamiltonian HybridHamiltonian::scalar(HamiltonianFunction h) {
  HybridHamiltonian out;
  out.dim_ = 1;
  out.terms_.push_back({std::move(h), Eigen::MatrixXcd::Identity(1, 1)});
  return out;
}

HybridHamiltonian HybridHamiltonian::from_terms(std::vector<HybridTerm> terms) {
  if (terms.empty())
    throw std::invalid_argument("hybrid Hamiltonian needs at least one term");
  HybridHamiltonian out;
  out.dim_ = static_cast<int>(terms.front().mat.rows());
  for (const auto& t : terms) {
    if (t.mat.rows() != out.dim_ || t.mat.cols() != out.dim_)
      throw MismatchError("hybrid term matrices must share one square size");
    if ((t.mat - t.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
      throw std::invalid_argument("hybrid term matrix is not Hermitian");
  }
  out.terms_ = std::move(terms);
  return out;
}

HybridHamiltonian HybridHamiltonian::diagonal_family(
    HamiltonianFunction h0, HamiltonianFunction h_i,
    const Eigen::MatrixXcd& sigma) {
  const int n = static_cast<int>(sigma.rows());
  std::vector<HybridTerm> terms;
  terms.push_back({std::move(h0), Eigen::MatrixXcd::Identity(n, n)});
  terms.push_back({std::move(h_i), sigma});
  HybridHamiltonian out = from_terms(std::move(terms));
  out.diagonal_ = true;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sigma);
  out.eigvals_ = es.eigenvalues();
  out.eigvecs_ = es.eigenvectors();
  return out;
}

Eigen::MatrixXcd HybridHamiltonian::value(double q, double p) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (const auto& t : terms_) out += t.fn.value(q, p) * t.mat;
  return out;
}

Eigen::MatrixXcd HybridHamiltonian::d_dq(double q, double p) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (const auto& t : terms_) out += t.fn.d_dq(q, p) * t.mat;
  return out;
}

Eigen::MatrixXcd HybridHamiltonian::d_dp(double q, double p) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (const auto& t : terms_) out += t.fn.d_dp(q, p) * t.mat;
  return out;
}

double HybridHamiltonian::hermiticity_defect() const {
  double worst = 0.0;
  for (const auto& t : terms_)
    worst = std::max(worst, (t.mat - t.mat.adjoint()).cwiseAbs().maxCoeff());
  return worst;
}

const HamiltonianFunction& HybridHamiltonian::h0() const {
  if (!diagonal_) throw std::logic_error("no diagonal-basis structure");
  return terms_[0].fn;
}

const HamiltonianFunction& HybridHamiltonian::h_interaction() const {
  if (!diagonal_) throw std::logic_error("no diagonal-basis structure");
  return terms_[1].fn;
}

const Eigen::MatrixXcd& HybridHamiltonian::sigma() const {
  if (!diagonal_) throw std::logic_error("no diagonal-basis structure");
  return terms_[1].mat;
}

const Eigen::VectorXd& HybridHamiltonian::sigma_eigenvalues() const {
  if (!diagonal_) throw std::logic_error("no diagonal-basis structure");
  return eigvals_;
}

const Eigen::MatrixXcd& HybridHamiltonian::sigma_eigenvectors() const {
  if (!diagonal_) throw std::logic_error("no diagonal-basis structure");
  return eigvecs_;
}

double HybridHamiltonian::max_flow_speed(const GridPtr& grid) const {
  // Per-entry gradients are sums over terms of grad(f_alpha) * (C_alpha)_jk.
  std::vector<RealField> dq_fields, dp_fields;
  dq_fields.reserve(terms_.size());
  dp_fields.reserve(terms_.size());
  for (const auto& t : terms_) {
    dq_fields.push_back(t.fn.d_dq(grid));
    dp_fields.push_back(t.fn.d_dp(grid));
  }
  double vmax = 0.0;
  const std::size_t nodes = grid->size();
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) {
      for (std::size_t i = 0; i < nodes; ++i) {
        cplx gq = 0.0, gp = 0.0;
        for (std::size_t a = 0; a < terms_.size(); ++a) {
          gq += dq_fields[a][i] * terms_[a].mat(j, k);
          gp += dp_fields[a][i] * terms_[a].mat(j, k);
        }
        vmax = std::max(vmax, std::hypot(std::abs(gq), std::abs(gp)));
      }
    }
  return vmax;
}

}  // namespace koopman
