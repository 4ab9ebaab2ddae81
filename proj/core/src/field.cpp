#include "koopman/field.hpp"

#include <algorithm>
#include <cmath>

namespace koopman {

void require_same_grid(const GridPtr& a, const GridPtr& b) {
  if (a.get() != b.get())
    throw MismatchError("fields live on different grids");
}

ComplexField::ComplexField(GridPtr grid, std::vector<cplx> data)
    : grid_(std::move(grid)), data_(std::move(data)) {
  if (data_.size() != grid_->size())
    throw MismatchError("field data size does not match grid");
}

ComplexField ComplexField::from_function(
    GridPtr grid, const std::function<cplx(double, double)>& f) {
  ComplexField out(grid);
  const auto& g = *grid;
  for (int iq = 0; iq < g.nq(); ++iq) {
    const double q = g.q(iq);
    for (int ip = 0; ip < g.np(); ++ip)
      out.data_[g.index(iq, ip)] = f(q, g.p(ip));
  }
  return out;
}

ComplexField& ComplexField::operator+=(const ComplexField& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexField& ComplexField::operator-=(const ComplexField& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexField& ComplexField::operator*=(cplx a) {
  for (auto& v : data_) v *= a;
  return *this;
}

ComplexField& ComplexField::axpy(cplx a, const ComplexField& x) {
  require_same_grid(grid_, x.grid_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += a * x.data_[i];
  return *this;
}

ComplexField& ComplexField::multiply_pointwise(const ComplexField& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] *= other.data_[i];
  return *this;
}

ComplexField& ComplexField::multiply_pointwise(const RealField& other) {
  require_same_grid(grid_, other.grid());
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] *= other[i];
  return *this;
}

RealField::RealField(GridPtr grid, std::vector<double> data)
    : grid_(std::move(grid)), data_(std::move(data)) {
  if (data_.size() != grid_->size())
    throw MismatchError("field data size does not match grid");
}

RealField RealField::from_function(
    GridPtr grid, const std::function<double(double, double)>& f) {
  RealField out(grid);
  const auto& g = *grid;
  for (int iq = 0; iq < g.nq(); ++iq) {
    const double q = g.q(iq);
    for (int ip = 0; ip < g.np(); ++ip)
      out.data_[g.index(iq, ip)] = f(q, g.p(ip));
  }
  return out;
}

RealField& RealField::operator+=(const RealField& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RealField& RealField::operator-=(const RealField& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RealField& RealField::operator*=(double a) {
  for (auto& v : data_) v *= a;
  return *this;
}

double RealField::min() const {
  return *std::min_element(data_.begin(), data_.end());
}

double RealField::max() const {
  return *std::max_element(data_.begin(), data_.end());
}

ComplexField RealField::to_complex() const {
  ComplexField out(grid_);
  for (std::size_t i = 0; i < data_.size(); ++i) out[i] = data_[i];
  return out;
}

MatrixField& MatrixField::operator+=(const MatrixField& other) {
  require_same_grid(grid_, other.grid_);
  if (dim_ != other.dim_) throw MismatchError("matrix field dims differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

MatrixField& MatrixField::operator*=(cplx a) {
  for (auto& v : data_) v *= a;
  return *this;
}

MatrixField& MatrixField::axpy(cplx a, const MatrixField& x) {
  require_same_grid(grid_, x.grid_);
  if (dim_ != x.dim_) throw MismatchError("matrix field dims differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += a * x.data_[i];
  return *this;
}

ComplexField MatrixField::entry_field(int j, int k) const {
  ComplexField out(grid_);
  const std::size_t n = nodes();
  for (std::size_t node = 0; node < n; ++node) out[node] = entry(node, j, k);
  return out;
}

void MatrixField::set_entry_field(int j, int k, const ComplexField& f) {
  require_same_grid(grid_, f.grid());
  const std::size_t n = nodes();
  for (std::size_t node = 0; node < n; ++node) entry(node, j, k) = f[node];
}

RealField MatrixField::trace_real() const {
  RealField out(grid_);
  const std::size_t n = nodes();
  for (std::size_t node = 0; node < n; ++node) {
    double tr = 0.0;
    for (int j = 0; j < dim_; ++j) tr += entry(node, j, j).real();
    out[node] = tr;
  }
  return out;
}

double MatrixField::max_hermiticity_defect() const {
  double worst = 0.0;
  const std::size_t n = nodes();
  for (std::size_t node = 0; node < n; ++node)
    for (int j = 0; j < dim_; ++j)
      for (int k = j; k < dim_; ++k)
        worst = std::max(worst,
                         std::abs(entry(node, j, k) - std::conj(entry(node, k, j))));
  return worst;
}

double MatrixField::resymmetrize() {
  const double defect = max_hermiticity_defect();
  const std::size_t n = nodes();
  for (std::size_t node = 0; node < n; ++node)
    for (int j = 0; j < dim_; ++j) {
      entry(node, j, j) = entry(node, j, j).real();
      for (int k = j + 1; k < dim_; ++k) {
        const cplx avg = 0.5 * (entry(node, j, k) + std::conj(entry(node, k, j)));
        entry(node, j, k) = avg;
        entry(node, k, j) = std::conj(avg);
      }
    }
  return defect;
}

double MatrixField::min_eigenvalue() const {
  double lo = std::numeric_limits<double>::infinity();
  const std::size_t n = nodes();
  if (dim_ == 1) {
    for (std::size_t node = 0; node < n; ++node)
      lo = std::min(lo, entry(node, 0, 0).real());
    return lo;
  }
  if (dim_ == 2) {
    // Closed form for Hermitian 2x2.
    for (std::size_t node = 0; node < n; ++node) {
      const double a = entry(node, 0, 0).real();
      const double d = entry(node, 1, 1).real();
      const double b2 = std::norm(entry(node, 0, 1));
      const double mean = 0.5 * (a + d);
      const double rad = std::sqrt(0.25 * (a - d) * (a - d) + b2);
      lo = std::min(lo, mean - rad);
    }
    return lo;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es;
  for (std::size_t node = 0; node < n; ++node) {
    es.compute(Eigen::MatrixXcd(at(node)), Eigen::EigenvaluesOnly);
    lo = std::min(lo, es.eigenvalues().minCoeff());
  }
  return lo;
}

}  // namespace koopman
