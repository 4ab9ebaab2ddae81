#include "koopman/classical_solver.hpp"

#include <cmath>

namespace koopman {

namespace detail {

void accumulate_kv_generator(const RealField& dHdq, const RealField& dHdp,
                             const RealField* lagrangian, double hbar,
                             const ComplexField& chi,
                             const ComplexField& dchi_dq,
                             const ComplexField& dchi_dp, ComplexField& out) {
  const std::size_t n = out.size();
  if (lagrangian) {
    const double inv_hbar = 1.0 / hbar;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx bracket = dHdq[i] * dchi_dp[i] - dHdp[i] * dchi_dq[i];
      const cplx phase = cplx(0.0, (*lagrangian)[i] * inv_hbar) * chi[i];
      out[i] += bracket + phase;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      out[i] += dHdq[i] * dchi_dp[i] - dHdp[i] * dchi_dq[i];
  }
}

}  // namespace detail

ClassicalSolver::ClassicalSolver(GridPtr grid, HamiltonianFunction h,
                                 ClassicalModel model, StepControl control)
    : grid_(std::move(grid)),
      h_(std::move(h)),
      model_(model),
      control_(control),
      dHdq_(h_.d_dq(grid_)),
      dHdp_(h_.d_dp(grid_)),
      lagrangian_(h_.lagrangian(grid_)),
      vmax_(0.0) {
  for (std::size_t i = 0; i < grid_->size(); ++i)
    vmax_ = std::max(vmax_, std::hypot(dHdp_[i], dHdq_[i]));
}

double ClassicalSolver::max_dt() const {
  if (vmax_ <= 0.0) return std::numeric_limits<double>::infinity();
  return control_.cfl * std::min(grid_->dq(), grid_->dp()) / vmax_;
}

ComplexField ClassicalSolver::rhs(const ComplexField& chi) const {
  require_same_grid(grid_, chi.grid());
  ComplexField dq = partial_q(chi);
  ComplexField dp = partial_p(chi);
  ComplexField out(grid_);
  const RealField* lag = model_ == ClassicalModel::kvh ? &lagrangian_ : nullptr;
  detail::accumulate_kv_generator(dHdq_, dHdp_, lag, grid_->hbar(), chi, dq, dp,
                                  out);
  return out;
}

ComplexField ClassicalSolver::step(const ComplexField& chi, double dt) const {
  if (control_.enforce_cfl && dt > max_dt())
    throw NumericalAbort({"cfl", dt, max_dt(), 0.0},
                         "time step exceeds CFL bound");
  return detail::rk4_step(chi, dt, [this](const ComplexField& y) { return rhs(y); });
}

ComplexField kvn_rhs(const ComplexField& chi, const HamiltonianFunction& h) {
  return ClassicalSolver(chi.grid(), h, ClassicalModel::kvn).rhs(chi);
}

ComplexField kvh_rhs(const ComplexField& chi, const HamiltonianFunction& h) {
  return ClassicalSolver(chi.grid(), h, ClassicalModel::kvh).rhs(chi);
}

ComplexField step(const ComplexField& chi, const HamiltonianFunction& h,
                  double dt, ClassicalModel model, StepControl control) {
  return ClassicalSolver(chi.grid(), h, model, control).step(chi, dt);
}

}  // namespace koopman
