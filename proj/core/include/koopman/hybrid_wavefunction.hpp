#pragma once

#include "koopman/calculus.hpp"

namespace koopman {

// n-component wavefunction on a shared phase-space grid.
class HybridWavefunction {
 public:
  HybridWavefunction(GridPtr grid, int dim);
  explicit HybridWavefunction(std::vector<ComplexField> components);

  int dim() const { return static_cast<int>(comps_.size()); }
  const GridPtr& grid() const { return comps_.front().grid(); }
  ComplexField& component(int j) { return comps_[j]; }
  const ComplexField& component(int j) const { return comps_[j]; }

  double total_norm2() const;  // sum_j ||component_j||^2
  HybridWavefunction& axpy(cplx a, const HybridWavefunction& x);
  HybridWavefunction& operator*=(cplx a);

 private:
  std::vector<ComplexField> comps_;
};

}  // namespace koopman
