#include "koopman/hamiltonian.hpp"

#include "koopman/calculus.hpp"

namespace koopman {

HamiltonianFunction HamiltonianFunction::quadratic(QuadraticCoeffs c) {
  HamiltonianFunction h;
  h.kind_ = Kind::quadratic;
  h.coeffs_ = c;
  return h;
}

HamiltonianFunction HamiltonianFunction::quadratic(double a, double b, double c,
                                                   double d, double e, double f) {
  return quadratic(QuadraticCoeffs{a, b, c, d, e, f});
}

HamiltonianFunction HamiltonianFunction::sampled(RealField values) {
  HamiltonianFunction h;
  h.kind_ = Kind::sampled;
  h.samples_ = std::move(values);
  return h;
}

HamiltonianFunction HamiltonianFunction::sampled(
    GridPtr grid, std::function<double(double, double)> fn,
    std::function<double(double, double)> dq_fn,
    std::function<double(double, double)> dp_fn) {
  HamiltonianFunction h;
  h.kind_ = Kind::sampled;
  h.samples_ = RealField::from_function(grid, fn);
  h.fn_ = std::move(fn);
  h.dq_fn_ = std::move(dq_fn);
  h.dp_fn_ = std::move(dp_fn);
  return h;
}

const QuadraticCoeffs& HamiltonianFunction::coeffs() const {
  if (kind_ != Kind::quadratic)
    throw std::logic_error("coeffs() on a sampled Hamiltonian");
  return coeffs_;
}

double HamiltonianFunction::value(double q, double p) const {
  if (kind_ == Kind::quadratic) return coeffs_.value(q, p);
  if (fn_) return fn_(q, p);
  throw std::logic_error("sampled Hamiltonian has no off-grid evaluator");
}

double HamiltonianFunction::d_dq(double q, double p) const {
  if (kind_ == Kind::quadratic) return coeffs_.dq(q, p);
  if (dq_fn_) return dq_fn_(q, p);
  throw std::logic_error("sampled Hamiltonian has no off-grid derivative");
}

double HamiltonianFunction::d_dp(double q, double p) const {
  if (kind_ == Kind::quadratic) return coeffs_.dp(q, p);
  if (dp_fn_) return dp_fn_(q, p);
  throw std::logic_error("sampled Hamiltonian has no off-grid derivative");
}

RealField HamiltonianFunction::values(const GridPtr& grid) const {
  if (kind_ == Kind::quadratic)
    return RealField::from_function(
        grid, [&](double q, double p) { return coeffs_.value(q, p); });
  require_same_grid(samples_->grid(), grid);
  return *samples_;
}

RealField HamiltonianFunction::d_dq(const GridPtr& grid) const {
  if (kind_ == Kind::quadratic)
    return RealField::from_function(
        grid, [&](double q, double p) { return coeffs_.dq(q, p); });
  if (dq_fn_) return RealField::from_function(grid, dq_fn_);
  require_same_grid(samples_->grid(), grid);
  return partial_q(*samples_);
}

RealField HamiltonianFunction::d_dp(const GridPtr& grid) const {
  if (kind_ == Kind::quadratic)
    return RealField::from_function(
        grid, [&](double q, double p) { return coeffs_.dp(q, p); });
  if (dp_fn_) return RealField::from_function(grid, dp_fn_);
  require_same_grid(samples_->grid(), grid);
  return partial_p(*samples_);
}

RealField HamiltonianFunction::lagrangian(const GridPtr& grid) const {
  if (kind_ == Kind::quadratic)
    return RealField::from_function(
        grid, [&](double q, double p) { return coeffs_.lagrangian(q, p); });
  RealField dp_h = d_dp(grid);
  RealField h = values(grid);
  RealField out(grid);
  const auto& g = *grid;
  for (int iq = 0; iq < g.nq(); ++iq)
    for (int ip = 0; ip < g.np(); ++ip) {
      const std::size_t i = g.index(iq, ip);
      out[i] = g.p(ip) * dp_h[i] - h[i];
    }
  return out;
}

}  // namespace koopman
