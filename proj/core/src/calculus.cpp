#include "koopman/calculus.hpp"

#include <cmath>
#include <numbers>

namespace koopman {

namespace {

using detail::Axis;
using detail::Direction;

void spectral_derivative(const PhaseSpaceGrid& g, Axis axis,
                         const std::vector<cplx>& in, std::vector<cplx>& out) {
  std::vector<cplx> hat(in.size());
  g.fft_axis(axis, Direction::forward, in.data(), hat.data());
  const auto& k = (axis == Axis::q) ? g.kq() : g.kp();
  const int nq = g.nq(), np = g.np();
  const double scale = 1.0 / ((axis == Axis::q) ? nq : np);
  for (int iq = 0; iq < nq; ++iq) {
    for (int ip = 0; ip < np; ++ip) {
      const double kk = (axis == Axis::q) ? k[iq] : k[ip];
      hat[g.index(iq, ip)] *= cplx(0.0, kk * scale);
    }
  }
  out.resize(in.size());
  g.fft_axis(axis, Direction::backward, hat.data(), out.data());
}

void central4_derivative(const PhaseSpaceGrid& g, Axis axis,
                         const std::vector<cplx>& in, std::vector<cplx>& out) {
  out.resize(in.size());
  const int nq = g.nq(), np = g.np();
  if (axis == Axis::q) {
    const double w = 1.0 / (12.0 * g.dq());
    for (int iq = 0; iq < nq; ++iq) {
      const int m2 = (iq - 2 + nq) % nq, m1 = (iq - 1 + nq) % nq;
      const int p1 = (iq + 1) % nq, p2 = (iq + 2) % nq;
      for (int ip = 0; ip < np; ++ip)
        out[g.index(iq, ip)] =
            w * (in[g.index(m2, ip)] - 8.0 * in[g.index(m1, ip)] +
                 8.0 * in[g.index(p1, ip)] - in[g.index(p2, ip)]);
    }
  } else {
    const double w = 1.0 / (12.0 * g.dp());
    for (int iq = 0; iq < nq; ++iq) {
      for (int ip = 0; ip < np; ++ip) {
        const int m2 = (ip - 2 + np) % np, m1 = (ip - 1 + np) % np;
        const int p1 = (ip + 1) % np, p2 = (ip + 2) % np;
        out[g.index(iq, ip)] =
            w * (in[g.index(iq, m2)] - 8.0 * in[g.index(iq, m1)] +
                 8.0 * in[g.index(iq, p1)] - in[g.index(iq, p2)]);
      }
    }
  }
}

ComplexField derivative(const ComplexField& f, Axis axis) {
  const auto& g = *f.grid();
  ComplexField out(f.grid());
  if (g.scheme() == DerivativeScheme::spectral)
    spectral_derivative(g, axis, f.data(), out.data());
  else
    central4_derivative(g, axis, f.data(), out.data());
  return out;
}

}  // namespace

ComplexField partial_q(const ComplexField& f) { return derivative(f, Axis::q); }
ComplexField partial_p(const ComplexField& f) { return derivative(f, Axis::p); }

RealField partial_q(const RealField& f) {
  ComplexField d = partial_q(f.to_complex());
  RealField out(f.grid());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = d[i].real();
  return out;
}

RealField partial_p(const RealField& f) {
  ComplexField d = partial_p(f.to_complex());
  RealField out(f.grid());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = d[i].real();
  return out;
}

ComplexField poisson_bracket(const ComplexField& f, const ComplexField& g) {
  require_same_grid(f.grid(), g.grid());
  ComplexField fq = partial_q(f), fp = partial_p(f);
  ComplexField gq = partial_q(g), gp = partial_p(g);
  ComplexField out(f.grid());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = fq[i] * gp[i] - fp[i] * gq[i];
  return out;
}

cplx integrate(const ComplexField& f) {
  detail::KahanSum re, im;
  for (const auto& v : f.data()) {
    re.add(v.real());
    im.add(v.imag());
  }
  return cplx(re.value(), im.value()) * f.grid()->cell();
}

double integrate(const RealField& f) {
  detail::KahanSum s;
  for (double v : f.data()) s.add(v);
  return s.value() * f.grid()->cell();
}

cplx inner(const ComplexField& f, const ComplexField& g) {
  require_same_grid(f.grid(), g.grid());
  detail::KahanSum re, im;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const cplx v = std::conj(f[i]) * g[i];
    re.add(v.real());
    im.add(v.imag());
  }
  return cplx(re.value(), im.value()) * f.grid()->cell();
}

double norm2(const ComplexField& f) {
  detail::KahanSum s;
  for (const auto& v : f.data()) s.add(std::norm(v));
  return s.value() * f.grid()->cell();
}

double l2_norm(const ComplexField& f) { return std::sqrt(norm2(f)); }

double l1_distance(const RealField& a, const RealField& b) {
  require_same_grid(a.grid(), b.grid());
  detail::KahanSum s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add(std::abs(a[i] - b[i]));
  return s.value() * a.grid()->cell();
}

RealField abs2(const ComplexField& f) {
  RealField out(f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::norm(f[i]);
  return out;
}

PolarDecomposition polar_decompose(const ComplexField& chi, double threshold) {
  const double hbar = chi.grid()->hbar();
  double peak = 0.0;
  for (const auto& v : chi.data()) peak = std::max(peak, std::abs(v));
  const double cut = threshold * peak;
  PolarDecomposition out{RealField(chi.grid()), RealField(chi.grid()),
                         std::vector<std::uint8_t>(chi.size(), 0)};
  for (std::size_t i = 0; i < chi.size(); ++i) {
    out.density[i] = std::norm(chi[i]);
    if (std::abs(chi[i]) > cut) {
      out.phase[i] = hbar * std::arg(chi[i]);
      out.mask[i] = 1;
    }
  }
  return out;
}

namespace {

template <typename FieldT, typename Weight>
double boundary_mass_impl(const FieldT& f, double margin, Weight weight) {
  if (!(margin > 0.0 && margin < 0.5))
    throw std::invalid_argument("boundary_mass: margin must be in (0, 0.5)");
  const auto& g = *f.grid();
  const int mq = static_cast<int>(std::round(margin * g.nq()));
  const int mp = static_cast<int>(std::round(margin * g.np()));
  detail::KahanSum band, total;
  for (int iq = 0; iq < g.nq(); ++iq) {
    const bool edge_q = iq < mq || iq >= g.nq() - mq;
    for (int ip = 0; ip < g.np(); ++ip) {
      const double w = weight(f[g.index(iq, ip)]);
      total.add(w);
      if (edge_q || ip < mp || ip >= g.np() - mp) band.add(w);
    }
  }
  const double t = total.value();
  return t > 0.0 ? band.value() / t : 0.0;
}

}  // namespace

double boundary_mass(const ComplexField& f, double margin) {
  return boundary_mass_impl(f, margin, [](const cplx& v) { return std::norm(v); });
}

double boundary_mass(const RealField& f, double margin) {
  return boundary_mass_impl(f, margin, [](double v) { return std::abs(v); });
}

FourierInterpolant::FourierInterpolant(const ComplexField& f)
    : grid_(f.grid()), coef_(f.size()) {
  grid_->fft_2d(detail::Direction::forward, f.data().data(), coef_.data());
  const double scale = 1.0 / static_cast<double>(f.size());
  for (auto& c : coef_) c *= scale;
}

cplx FourierInterpolant::operator()(double q, double p) const {
  const auto& g = *grid_;
  const double Lq = g.length_q(), Lp = g.length_p();
  double uq = std::fmod(q - g.extents().q_min, Lq);
  if (uq < 0) uq += Lq;
  double up = std::fmod(p - g.extents().p_min, Lp);
  if (up < 0) up += Lp;

  const int nq = g.nq(), np = g.np();
  // Phase tables for e^{i k u}; Nyquist mode evaluated as cos so that
  // real-valued samples reconstruct to real values.
  std::vector<cplx> eq(nq), ep(np);
  const double aq = 2.0 * std::numbers::pi * uq / Lq;
  const double ap = 2.0 * std::numbers::pi * up / Lp;
  for (int j = 0; j < nq; ++j) {
    const int m = j <= nq / 2 ? j : j - nq;
    eq[j] = (j == nq / 2) ? cplx(std::cos(m * aq), 0.0)
                          : std::polar(1.0, m * aq);
  }
  for (int l = 0; l < np; ++l) {
    const int m = l <= np / 2 ? l : l - np;
    ep[l] = (l == np / 2) ? cplx(std::cos(m * ap), 0.0)
                          : std::polar(1.0, m * ap);
  }
  cplx acc = 0.0;
  for (int j = 0; j < nq; ++j) {
    cplx row = 0.0;
    const cplx* c = coef_.data() + static_cast<std::size_t>(j) * np;
    for (int l = 0; l < np; ++l) row += c[l] * ep[l];
    acc += eq[j] * row;
  }
  return acc;
}

}  // namespace koopman
