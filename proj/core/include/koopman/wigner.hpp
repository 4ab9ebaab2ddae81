#pragma once

#include <Eigen/Dense>

#include "koopman/field.hpp"

namespace koopman {

struct WignerField {
  RealField w;
  double source_trace;  // Tr rho; equals integral w up to box truncation
};

// Phase-space transform of a number-basis density matrix, convention
//   W(q,p) = (1/(2 pi hbar)) integral e^{-i p y/hbar} rho(q+y/2, q-y/2) dy,
// assembled from the closed-form kernels of the dyads |m><n|: for m >= n,
//   W_mn = ((-1)^n / (pi hbar)) sqrt(n!/m!) ubar^{m-n} e^{-s/2} L_n^{m-n}(s)
// with ubar = sqrt(2/hbar)(q - i p) and s = 2(q^2 + p^2)/hbar, the rest by
// conjugate symmetry.  Real output for Hermitian input.
WignerField wigner_from_density(const Eigen::MatrixXcd& rho_osc,
                                const GridPtr& grid);

// Whether the grid resolves the fastest kernel oscillation at this
// truncation: pi/dq and pi/dp >= 2 sqrt((2 levels + 1)/hbar).
bool wigner_resolves(const GridPtr& grid, int levels);

}  // namespace koopman
