#include "koopman/ehrenfest.hpp"

#include "koopman/classical_solver.hpp"
#include "koopman/errors.hpp"

namespace koopman {

EhrenfestSolver::EhrenfestSolver(HybridHamiltonian h, double hbar)
    : h_(std::move(h)), hbar_(hbar) {
  if (hbar_ <= 0.0) throw std::invalid_argument("hbar must be positive");
}

EhrenfestState EhrenfestSolver::rhs(const EhrenfestState& s) const {
  if (s.psi.size() != h_.dim())
    throw MismatchError("state/Hamiltonian dims differ");
  EhrenfestState d;
  d.q = (s.psi.adjoint() * h_.d_dp(s.q, s.p) * s.psi).value().real();
  d.p = -(s.psi.adjoint() * h_.d_dq(s.q, s.p) * s.psi).value().real();
  d.psi = (cplx(0.0, -1.0) / hbar_) * (h_.value(s.q, s.p) * s.psi);
  return d;
}

EhrenfestState EhrenfestSolver::step(const EhrenfestState& s, double dt) const {
  return detail::rk4_step(s, dt,
                          [this](const EhrenfestState& y) { return rhs(y); });
}

double EhrenfestSolver::energy(const EhrenfestState& s) const {
  return (s.psi.adjoint() * h_.value(s.q, s.p) * s.psi).value().real();
}

Eigen::MatrixXcd EhrenfestSolver::density(const EhrenfestState& s) const {
  return s.psi * s.psi.adjoint();
}

}  // namespace koopman
