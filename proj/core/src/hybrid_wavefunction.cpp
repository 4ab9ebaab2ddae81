#include "koopman/hybrid_wavefunction.hpp"

namespace koopman {

HybridWavefunction::HybridWavefunction(GridPtr grid, int dim) {
  if (dim < 1) throw std::invalid_argument("wavefunction dim must be >= 1");
  comps_.reserve(dim);
  for (int j = 0; j < dim; ++j) comps_.emplace_back(grid);
}

HybridWavefunction::HybridWavefunction(std::vector<ComplexField> components)
    : comps_(std::move(components)) {
  if (comps_.empty())
    throw std::invalid_argument("wavefunction needs at least one component");
  for (const auto& c : comps_) require_same_grid(c.grid(), comps_.front().grid());
}

double HybridWavefunction::total_norm2() const {
  double acc = 0.0;
  for (const auto& c : comps_) acc += norm2(c);
  return acc;
}

HybridWavefunction& HybridWavefunction::axpy(cplx a, const HybridWavefunction& x) {
  if (dim() != x.dim()) throw MismatchError("wavefunction dims differ");
  for (int j = 0; j < dim(); ++j) comps_[j].axpy(a, x.comps_[j]);
  return *this;
}

HybridWavefunction& HybridWavefunction::operator*=(cplx a) {
  for (auto& c : comps_) c *= a;
  return *this;
}

}  // namespace koopman
