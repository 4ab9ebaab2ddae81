#pragma once

#include <array>

#include "koopman/classical_solver.hpp"

namespace koopman {

// Exact flow of a quadratic Hamiltonian.  Hamilton's equations are affine,
//   d/dt (q,p) = A (q,p) + r,  A = [[c, 2b], [-2a, -c]],  r = (e, -d),
// and tr A = 0, so exp(At) = C(t) I + S(t) A with C, S elementary functions
// of mu^2 = c^2 - 4ab (series near mu = 0).
class AffineFlow {
 public:
  explicit AffineFlow(const QuadraticCoeffs& h);

  struct Propagator {
    std::array<double, 4> E;  // row-major 2x2 fundamental matrix
    std::array<double, 2> T;  // translation
  };
  Propagator propagator(double t) const;

  std::array<double, 2> apply(double t, double q, double p) const;

 private:
  std::array<double, 4> A_;
  std::array<double, 2> r_;
  double mu2_;
};

// integral_0^t (p dH/dp - H)(Phi_s(q0, p0)) ds along the exact flow,
// composite Gauss-Legendre with 64 nodes per panel.
double action_integral(const QuadraticCoeffs& h, double q0, double p0, double t);

// Exact (method-of-characteristics) solution at time t on the grid nodes:
//   chi(z, t) = chi0(Phi_{-t} z) * exp(i Theta / hbar)   [kvh]
//   chi(z, t) = chi0(Phi_{-t} z)                          [kvn]
// where Theta is the action accumulated along the trajectory arriving at z.
// chi0 must be an evaluable closed form; h must be quadratic.
ComplexField characteristics_solution(
    const std::function<cplx(double, double)>& chi0, const HamiltonianFunction& h,
    double t, const GridPtr& grid, ClassicalModel model = ClassicalModel::kvh);

// 64-point Gauss-Legendre nodes/weights on [-1, 1].
const std::array<double, 64>& gauss_legendre_nodes();
const std::array<double, 64>& gauss_legendre_weights();

}  // namespace koopman
