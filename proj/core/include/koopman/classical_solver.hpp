#pragma once

#include "koopman/calculus.hpp"
#include "koopman/hamiltonian.hpp"

namespace koopman {

enum class ClassicalModel { kvn, kvh };

struct StepControl {
  double cfl = 0.5;
  bool enforce_cfl = true;
};

namespace detail {

// Shared generator kernel:
//   out += dHdq * dchi_dp - dHdp * dchi_dq + (i/hbar) * L * chi
// The phase term is skipped when lagrangian == nullptr.  Both the classical
// solver and the hybrid solver funnel through this so the n = 1 hybrid case
// reproduces the scalar path bit for bit.
void accumulate_kv_generator(const RealField& dHdq, const RealField& dHdp,
                             const RealField* lagrangian, double hbar,
                             const ComplexField& chi,
                             const ComplexField& dchi_dq,
                             const ComplexField& dchi_dp, ComplexField& out);

template <class State, class Rhs>
State rk4_step(const State& y, double dt, Rhs&& rhs) {
  State k1 = rhs(y);
  State u = y;
  u.axpy(0.5 * dt, k1);
  State k2 = rhs(u);
  u = y;
  u.axpy(0.5 * dt, k2);
  State k3 = rhs(u);
  u = y;
  u.axpy(dt, k3);
  State k4 = rhs(u);
  State out = y;
  out.axpy(dt / 6.0, k1);
  out.axpy(dt / 3.0, k2);
  out.axpy(dt / 3.0, k3);
  out.axpy(dt / 6.0, k4);
  return out;
}

}  // namespace detail

// Evolves a classical wavefunction chi by
//   kvn:  d_t chi = {H, chi}
//   kvh:  d_t chi = {H, chi} + (i/hbar) (p dH/dp - H) chi
// with RK4 in time.  Coefficient fields are precomputed at construction.
class ClassicalSolver {
 public:
  ClassicalSolver(GridPtr grid, HamiltonianFunction h, ClassicalModel model,
                  StepControl control = {});

  const HamiltonianFunction& hamiltonian() const { return h_; }
  ClassicalModel model() const { return model_; }
  const GridPtr& grid() const { return grid_; }

  ComplexField rhs(const ComplexField& chi) const;
  // One RK4 step; enforces dt <= cfl * min(dq,dp) / max|X_H| if enabled.
  ComplexField step(const ComplexField& chi, double dt) const;

  double max_flow_speed() const { return vmax_; }
  double max_dt() const;

 private:
  GridPtr grid_;
  HamiltonianFunction h_;
  ClassicalModel model_;
  StepControl control_;
  RealField dHdq_, dHdp_;
  RealField lagrangian_;
  double vmax_;
};

ComplexField kvn_rhs(const ComplexField& chi, const HamiltonianFunction& h);
ComplexField kvh_rhs(const ComplexField& chi, const HamiltonianFunction& h);
ComplexField step(const ComplexField& chi, const HamiltonianFunction& h,
                  double dt, ClassicalModel model, StepControl control = {});

}  // namespace koopman
