#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "koopman/grid.hpp"

namespace koopman {

using cplx = std::complex<double>;

class RealField;

// Complex scalar field sampled on a PhaseSpaceGrid (row-major, q outer).
class ComplexField {
 public:
  explicit ComplexField(GridPtr grid)
      : grid_(std::move(grid)), data_(grid_->size()) {}
  ComplexField(GridPtr grid, std::vector<cplx> data);

  static ComplexField from_function(GridPtr grid,
                                    const std::function<cplx(double, double)>& f);

  const GridPtr& grid() const { return grid_; }
  std::size_t size() const { return data_.size(); }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }
  cplx& at(int iq, int ip) { return data_[grid_->index(iq, ip)]; }
  const cplx& at(int iq, int ip) const { return data_[grid_->index(iq, ip)]; }
  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  ComplexField& operator+=(const ComplexField& other);
  ComplexField& operator-=(const ComplexField& other);
  ComplexField& operator*=(cplx a);
  // this += a*x
  ComplexField& axpy(cplx a, const ComplexField& x);
  ComplexField& multiply_pointwise(const ComplexField& other);
  ComplexField& multiply_pointwise(const RealField& other);

 private:
  GridPtr grid_;
  std::vector<cplx> data_;
};

class RealField {
 public:
  explicit RealField(GridPtr grid)
      : grid_(std::move(grid)), data_(grid_->size()) {}
  RealField(GridPtr grid, std::vector<double> data);

  static RealField from_function(GridPtr grid,
                                 const std::function<double(double, double)>& f);

  const GridPtr& grid() const { return grid_; }
  std::size_t size() const { return data_.size(); }
  double& operator[](std::size_t i) { return data_[i]; }
  const double& operator[](std::size_t i) const { return data_[i]; }
  double& at(int iq, int ip) { return data_[grid_->index(iq, ip)]; }
  const double& at(int iq, int ip) const { return data_[grid_->index(iq, ip)]; }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  RealField& operator+=(const RealField& other);
  RealField& operator-=(const RealField& other);
  RealField& operator*=(double a);

  double min() const;
  double max() const;
  ComplexField to_complex() const;

 private:
  GridPtr grid_;
  std::vector<double> data_;
};

// n x n complex matrix attached to every grid node.  Layout: node-major,
// then row-major within the matrix block.
class MatrixField {
 public:
  MatrixField(GridPtr grid, int dim)
      : grid_(std::move(grid)), dim_(dim),
        data_(grid_->size() * dim * dim) {}

  const GridPtr& grid() const { return grid_; }
  int dim() const { return dim_; }
  std::size_t nodes() const { return grid_->size(); }

  cplx* block(std::size_t node) { return data_.data() + node * dim_ * dim_; }
  const cplx* block(std::size_t node) const {
    return data_.data() + node * dim_ * dim_;
  }
  cplx& entry(std::size_t node, int j, int k) {
    return data_[node * dim_ * dim_ + static_cast<std::size_t>(j) * dim_ + k];
  }
  const cplx& entry(std::size_t node, int j, int k) const {
    return data_[node * dim_ * dim_ + static_cast<std::size_t>(j) * dim_ + k];
  }
  using Map = Eigen::Map<Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>;
  using ConstMap = Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic,
                                                  Eigen::Dynamic, Eigen::RowMajor>>;
  Map at(std::size_t node) { return Map(block(node), dim_, dim_); }
  ConstMap at(std::size_t node) const { return ConstMap(block(node), dim_, dim_); }

  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  MatrixField& operator+=(const MatrixField& other);
  MatrixField& operator*=(cplx a);
  MatrixField& axpy(cplx a, const MatrixField& x);

  // Copies one matrix entry out as a scalar field / writes it back.
  ComplexField entry_field(int j, int k) const;
  void set_entry_field(int j, int k, const ComplexField& f);

  RealField trace_real() const;
  double max_hermiticity_defect() const;
  // (P + P^dagger)/2 in place; returns the max defect before symmetrizing.
  double resymmetrize();
  // Eigenvalue extrema over nodes; valid for Hermitian-valued fields.
  double min_eigenvalue() const;

 private:
  GridPtr grid_;
  int dim_;
  std::vector<cplx> data_;
};

struct PolarDecomposition {
  RealField density;        // |chi|^2
  RealField phase;          // hbar * arg(chi), in (-pi*hbar, pi*hbar]
  std::vector<std::uint8_t> mask;  // 1 where |chi| > threshold
};

void require_same_grid(const GridPtr& a, const GridPtr& b);

}  // namespace koopman
