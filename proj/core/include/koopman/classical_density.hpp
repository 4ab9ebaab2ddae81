#pragma once

#include "koopman/calculus.hpp"

namespace koopman {

enum class DensityProvenance {
  kvn,                 // |chi|^2
  kvh_momentum_map,    // |chi|^2 + d_p(p |chi|^2) + hbar Im{conj(chi), chi}
  hybrid_eq8,          // component sum of the momentum-map extraction
  nonlinear_trace,     // Tr of a hybrid density field
  liouville_reference, // advected reference density
};

struct ClassicalDensityField {
  RealField rho;
  DensityProvenance provenance;
};

ClassicalDensityField kvn_density(const ComplexField& chi);

// Momentum-map extraction.  Integrates to ||chi||^2 (the derivative terms
// integrate to zero); generally sign-indefinite pointwise.
ClassicalDensityField kvh_classical_density(const ComplexField& chi);

namespace detail {
// The two correction terms of the momentum-map extraction, added onto acc.
void add_momentum_map_corrections(const ComplexField& chi, RealField& acc);
}  // namespace detail

}  // namespace koopman
