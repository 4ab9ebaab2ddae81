#pragma once

#include "koopman/classical_density.hpp"
#include "koopman/classical_solver.hpp"

namespace koopman {

// Checks the defining pairing of the momentum-map extraction:
//   2 hbar Im<xi_V(chi) | chi>  ==  2 * integral rho_c[chi] * xi dq dp
// where xi_V(chi) = {xi, chi} + (i/hbar)(p d_p xi - xi) chi is the lifted
// generator of the phase-space function xi.  Returns the absolute residual.
double momentum_map_pairing_residual(const ComplexField& chi,
                                     const HamiltonianFunction& xi);

}  // namespace koopman
