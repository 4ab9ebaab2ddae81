#include "koopman/characteristics.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace koopman {

namespace {

// C = sum mu^{2k} t^{2k} / (2k)!,  S = sum mu^{2k} t^{2k+1} / (2k+1)!,
// U = sum mu^{2k} t^{2k+2} / (2k+2)!   (so exp(At) = C I + S A and
// int_0^t exp(As) ds = S I + U A).
struct TraceFreeExp {
  double C, S, U;
};

TraceFreeExp trace_free_exp(double mu2, double t) {
  const double x = mu2 * t * t;
  if (std::abs(x) < 1e-8) {
    // 4-term series; truncation below 1e-32 relative here.
    const double x2 = x * x;
    return {1.0 + x / 2 + x2 / 24 + x * x2 / 720,
            t * (1.0 + x / 6 + x2 / 120 + x * x2 / 5040),
            t * t * (0.5 + x / 24 + x2 / 720 + x * x2 / 40320)};
  }
  if (mu2 > 0) {
    const double m = std::sqrt(mu2);
    return {std::cosh(m * t), std::sinh(m * t) / m,
            (std::cosh(m * t) - 1.0) / mu2};
  }
  const double w = std::sqrt(-mu2);
  return {std::cos(w * t), std::sin(w * t) / w, (std::cos(w * t) - 1.0) / mu2};
}

struct GaussLegendre {
  std::array<double, 64> nodes, weights;
};

GaussLegendre compute_gl64() {
  // Newton iteration on P_64; standard symmetric construction.
  constexpr int n = 64;
  GaussLegendre out{};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    out.nodes[i] = -x;
    out.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    out.weights[i] = w;
    out.weights[n - 1 - i] = w;
  }
  return out;
}

const GaussLegendre& gl64() {
  static const GaussLegendre table = compute_gl64();
  return table;
}

}  // namespace

const std::array<double, 64>& gauss_legendre_nodes() { return gl64().nodes; }
const std::array<double, 64>& gauss_legendre_weights() { return gl64().weights; }

AffineFlow::AffineFlow(const QuadraticCoeffs& h)
    : A_{h.c, 2.0 * h.b, -2.0 * h.a, -h.c},
      r_{h.e, -h.d},
      mu2_(h.c * h.c - 4.0 * h.a * h.b) {}

AffineFlow::Propagator AffineFlow::propagator(double t) const {
  const TraceFreeExp e = trace_free_exp(mu2_, t);
  Propagator out;
  out.E = {e.C + e.S * A_[0], e.S * A_[1], e.S * A_[2], e.C + e.S * A_[3]};
  // int_0^t exp(As) ds applied to r.
  out.T = {e.S * r_[0] + e.U * (A_[0] * r_[0] + A_[1] * r_[1]),
           e.S * r_[1] + e.U * (A_[2] * r_[0] + A_[3] * r_[1])};
  return out;
}

std::array<double, 2> AffineFlow::apply(double t, double q, double p) const {
  const Propagator pr = propagator(t);
  return {pr.E[0] * q + pr.E[1] * p + pr.T[0],
          pr.E[2] * q + pr.E[3] * p + pr.T[1]};
}

double action_integral(const QuadraticCoeffs& h, double q0, double p0,
                       double t) {
  if (t == 0.0) return 0.0;
  const AffineFlow flow(h);
  const double mu = std::sqrt(std::abs(h.c * h.c - 4.0 * h.a * h.b));
  const int panels =
      std::max(1, static_cast<int>(std::ceil(std::abs(t) * std::max(1.0, mu) / 4.0)));
  const auto& xs = gauss_legendre_nodes();
  const auto& ws = gauss_legendre_weights();
  double acc = 0.0;
  for (int panel = 0; panel < panels; ++panel) {
    const double s0 = t * panel / panels, s1 = t * (panel + 1) / panels;
    const double half = 0.5 * (s1 - s0), mid = 0.5 * (s0 + s1);
    for (int j = 0; j < 64; ++j) {
      const double s = mid + half * xs[j];
      const auto z = flow.apply(s, q0, p0);
      acc += half * ws[j] * h.lagrangian(z[0], z[1]);
    }
  }
  return acc;
}

ComplexField characteristics_solution(
    const std::function<cplx(double, double)>& chi0, const HamiltonianFunction& h,
    double t, const GridPtr& grid, ClassicalModel model) {
  if (!h.is_quadratic())
    throw std::invalid_argument(
        "characteristics_solution requires a quadratic Hamiltonian");
  const QuadraticCoeffs& c = h.coeffs();
  const AffineFlow flow(c);
  const AffineFlow::Propagator back = flow.propagator(-t);

  // Quadrature nodes for the action are shared by all grid nodes: the
  // trajectory point at time s is affine in z0, so precompute the
  // propagators at the panel-mapped Gauss-Legendre abscissae.
  struct QuadNode {
    AffineFlow::Propagator pr;
    double weight;
  };
  std::vector<QuadNode> quad;
  const bool with_phase = model == ClassicalModel::kvh && t != 0.0;
  if (with_phase) {
    const double mu = std::sqrt(std::abs(c.c * c.c - 4.0 * c.a * c.b));
    const int panels = std::max(
        1, static_cast<int>(std::ceil(std::abs(t) * std::max(1.0, mu) / 4.0)));
    const auto& xs = gauss_legendre_nodes();
    const auto& ws = gauss_legendre_weights();
    quad.reserve(static_cast<std::size_t>(panels) * 64);
    for (int panel = 0; panel < panels; ++panel) {
      const double s0 = t * panel / panels, s1 = t * (panel + 1) / panels;
      const double half = 0.5 * (s1 - s0), mid = 0.5 * (s0 + s1);
      for (int j = 0; j < 64; ++j)
        quad.push_back({flow.propagator(mid + half * xs[j]), half * ws[j]});
    }
  }

  ComplexField out(grid);
  const auto& g = *grid;
  const double inv_hbar = 1.0 / g.hbar();
  for (int iq = 0; iq < g.nq(); ++iq) {
    const double q = g.q(iq);
    for (int ip = 0; ip < g.np(); ++ip) {
      const double p = g.p(ip);
      const double q0 = back.E[0] * q + back.E[1] * p + back.T[0];
      const double p0 = back.E[2] * q + back.E[3] * p + back.T[1];
      cplx v = chi0(q0, p0);
      if (with_phase) {
        double theta = 0.0;
        for (const auto& node : quad) {
          const double qs = node.pr.E[0] * q0 + node.pr.E[1] * p0 + node.pr.T[0];
          const double ps = node.pr.E[2] * q0 + node.pr.E[3] * p0 + node.pr.T[1];
          theta += node.weight * c.lagrangian(qs, ps);
        }
        v *= std::polar(1.0, theta * inv_hbar);
      }
      out.at(iq, ip) = v;
    }
  }
  return out;
}

}  // namespace koopman
