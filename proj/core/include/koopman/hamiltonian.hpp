#pragma once

#include <functional>
#include <optional>

#include "koopman/field.hpp"

namespace koopman {

// H = a q^2 + b p^2 + c qp + d q + e p + f
struct QuadraticCoeffs {
  double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  double value(double q, double p) const {
    return a * q * q + b * p * p + c * q * p + d * q + e * p + f;
  }
  double dq(double q, double p) const { return 2 * a * q + c * p + d; }
  double dp(double q, double p) const { return 2 * b * p + c * q + e; }
  // p dH/dp - H; the q p and p cross terms cancel.
  double lagrangian(double q, double p) const {
    return b * p * p - a * q * q - d * q - f;
  }
  QuadraticCoeffs plus(const QuadraticCoeffs& o, double w) const {
    return {a + w * o.a, b + w * o.b, c + w * o.c,
            d + w * o.d, e + w * o.e, f + w * o.f};
  }
  bool operator==(const QuadraticCoeffs&) const = default;
};

// Real Hamiltonian on phase space.  Either an exact quadratic (derivatives
// analytic) or a sampled field (derivatives via the grid scheme; an optional
// closed-form evaluator enables off-grid use, e.g. along trajectories).
class HamiltonianFunction {
 public:
  enum class Kind { quadratic, sampled };

  static HamiltonianFunction quadratic(QuadraticCoeffs c);
  static HamiltonianFunction quadratic(double a, double b, double c, double d,
                                       double e, double f);
  static HamiltonianFunction sampled(RealField values);
  static HamiltonianFunction sampled(
      GridPtr grid, std::function<double(double, double)> fn,
      std::function<double(double, double)> dq_fn = nullptr,
      std::function<double(double, double)> dp_fn = nullptr);

  Kind kind() const { return kind_; }
  bool is_quadratic() const { return kind_ == Kind::quadratic; }
  const QuadraticCoeffs& coeffs() const;

  // Pointwise evaluation; throws for sampled kind without an evaluator.
  double value(double q, double p) const;
  double d_dq(double q, double p) const;
  double d_dp(double q, double p) const;

  RealField values(const GridPtr& grid) const;
  RealField d_dq(const GridPtr& grid) const;
  RealField d_dp(const GridPtr& grid) const;
  // p dH/dp - H on nodes.
  RealField lagrangian(const GridPtr& grid) const;

 private:
  HamiltonianFunction() = default;
  Kind kind_ = Kind::quadratic;
  QuadraticCoeffs coeffs_{};
  std::optional<RealField> samples_;
  std::function<double(double, double)> fn_, dq_fn_, dp_fn_;
};

}  // namespace koopman
