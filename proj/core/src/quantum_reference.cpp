#include "koopman/quantum_reference.hpp"

#include <cmath>
#include <stdexcept>

#include "koopman/errors.hpp"

namespace koopman {

Eigen::MatrixXcd ladder_lowering(int levels) {
  if (levels < 1) throw std::invalid_argument("levels must be positive");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(levels, levels);
  for (int m = 1; m < levels; ++m) a(m - 1, m) = std::sqrt(double(m));
  return a;
}

Eigen::MatrixXcd position_operator(int levels, double hbar) {
  const Eigen::MatrixXcd a = ladder_lowering(levels);
  return std::sqrt(hbar / 2.0) * (a + a.adjoint());
}

Eigen::MatrixXcd momentum_operator(int levels, double hbar) {
  const Eigen::MatrixXcd a = ladder_lowering(levels);
  return cplx(0.0, 1.0) * std::sqrt(hbar / 2.0) * (a.adjoint() - a);
}

Eigen::MatrixXcd weyl_quantize(const QuadraticCoeffs& c, int levels,
                               double hbar) {
  const Eigen::MatrixXcd q = position_operator(levels, hbar);
  const Eigen::MatrixXcd p = momentum_operator(levels, hbar);
  Eigen::MatrixXcd out = c.a * q * q + c.b * p * p +
                         0.5 * c.c * (q * p + p * q) + c.d * q + c.e * p;
  out += c.f * Eigen::MatrixXcd::Identity(levels, levels);
  return out;
}

Eigen::MatrixXcd composite_hamiltonian(const HybridHamiltonian& h, int levels,
                                       double hbar) {
  const int n = h.dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(levels * n, levels * n);
  for (const auto& term : h.terms()) {
    if (!term.fn.is_quadratic())
      throw std::invalid_argument(
          "composite_hamiltonian requires quadratic terms");
    const Eigen::MatrixXcd op = weyl_quantize(term.fn.coeffs(), levels, hbar);
    for (int m = 0; m < levels; ++m)
      for (int mp = 0; mp < levels; ++mp) {
        if (op(m, mp) == 0.0) continue;
        out.block(m * n, mp * n, n, n) += op(m, mp) * term.mat;
      }
  }
  return out;
}

QuantumPropagator::QuantumPropagator(const Eigen::MatrixXcd& h, double hbar)
    : hbar_(hbar) {
  if (h.rows() != h.cols()) throw std::invalid_argument("square matrix required");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + h.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("Hamiltonian must be Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  eigs_ = es.eigenvalues();
  vecs_ = es.eigenvectors();
}

Eigen::VectorXcd QuantumPropagator::evolve(const Eigen::VectorXcd& psi0,
                                           double t) const {
  if (psi0.size() != eigs_.size()) throw MismatchError("state size differs");
  Eigen::VectorXcd coef = vecs_.adjoint() * psi0;
  for (Eigen::Index k = 0; k < coef.size(); ++k)
    coef(k) *= std::polar(1.0, -eigs_(k) * t / hbar_);
  return vecs_ * coef;
}

Eigen::MatrixXcd spin_reduced_density(const Eigen::VectorXcd& psi, int dim) {
  if (psi.size() % dim != 0) throw MismatchError("state size not divisible");
  const int levels = static_cast<int>(psi.size()) / dim;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 0; m < levels; ++m)
    rho += psi.segment(m * dim, dim) * psi.segment(m * dim, dim).adjoint();
  return rho;
}

Eigen::MatrixXcd oscillator_reduced_density(const Eigen::VectorXcd& psi,
                                            int dim) {
  if (psi.size() % dim != 0) throw MismatchError("state size not divisible");
  const int levels = static_cast<int>(psi.size()) / dim;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(levels, levels);
  for (int m = 0; m < levels; ++m)
    for (int mp = 0; mp < levels; ++mp)
      for (int j = 0; j < dim; ++j)
        rho(m, mp) += psi(m * dim + j) * std::conj(psi(mp * dim + j));
  return rho;
}

double truncation_tail(const Eigen::VectorXcd& psi, int dim, int guard_levels) {
  if (psi.size() % dim != 0) throw MismatchError("state size not divisible");
  const int levels = static_cast<int>(psi.size()) / dim;
  const int start = std::max(0, levels - guard_levels);
  double tail = 0.0;
  for (int m = start; m < levels; ++m)
    tail += psi.segment(m * dim, dim).squaredNorm();
  return tail;
}

void require_truncation_tail(const Eigen::VectorXcd& psi, int dim,
                             double limit, double time, int guard_levels) {
  const double tail = truncation_tail(psi, dim, guard_levels);
  if (tail > limit)
    throw NumericalAbort({"truncation_tail", tail, limit, time},
                         "oscillator-basis truncation tail exceeded");
}

Eigen::VectorXcd ground_state_product(int levels,
                                      const Eigen::VectorXcd& spin) {
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(levels * spin.size());
  psi.segment(0, spin.size()) = spin;
  return psi;
}

}  // namespace koopman
