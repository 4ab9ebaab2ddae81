#include "koopman/nqcle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>

#include "koopman/calculus.hpp"
#include "koopman/errors.hpp"

namespace koopman {

namespace {

// First-order upwind, flux form: faces carry the averaged velocity and take
// the donor-cell value.  Periodic wrap; the face fluxes telescope, so the
// grid sum of the divergence is exactly zero.
ComplexField upwind_divergence(const ComplexField& g, const RealField& vq,
                               const RealField& vp) {
  const GridPtr& grid = g.grid();
  const int nq = grid->nq(), np = grid->np();
  ComplexField out(grid);

  std::vector<cplx> flux(static_cast<std::size_t>(nq) * np);
  auto idx = [np](int iq, int ip) {
    return static_cast<std::size_t>(iq) * np + ip;
  };

  for (int iq = 0; iq < nq; ++iq) {
    const int iq1 = (iq + 1) % nq;
    for (int ip = 0; ip < np; ++ip) {
      const double vf = 0.5 * (vq[idx(iq, ip)] + vq[idx(iq1, ip)]);
      flux[idx(iq, ip)] = vf * (vf >= 0.0 ? g[idx(iq, ip)] : g[idx(iq1, ip)]);
    }
  }
  for (int iq = 0; iq < nq; ++iq) {
    const int iqm = (iq + nq - 1) % nq;
    for (int ip = 0; ip < np; ++ip)
      out[idx(iq, ip)] = (flux[idx(iq, ip)] - flux[idx(iqm, ip)]) / grid->dq();
  }

  for (int iq = 0; iq < nq; ++iq) {
    for (int ip = 0; ip < np; ++ip) {
      const int ip1 = (ip + 1) % np;
      const double vf = 0.5 * (vp[idx(iq, ip)] + vp[idx(iq, ip1)]);
      flux[idx(iq, ip)] = vf * (vf >= 0.0 ? g[idx(iq, ip)] : g[idx(iq, ip1)]);
    }
  }
  for (int iq = 0; iq < nq; ++iq) {
    for (int ip = 0; ip < np; ++ip) {
      const int ipm = (ip + np - 1) % np;
      out[idx(iq, ip)] += (flux[idx(iq, ip)] - flux[idx(iq, ipm)]) / grid->dp();
    }
  }
  return out;
}

}  // namespace

NqcleSolver::NqcleSolver(GridPtr grid, HybridHamiltonian h, NqcleOptions opts)
    : grid_(std::move(grid)), h_(std::move(h)), opts_(std::move(opts)) {
  term_fields_.reserve(h_.terms().size());
  for (const auto& t : h_.terms())
    term_fields_.push_back(
        {t.fn.values(grid_), t.fn.d_dq(grid_), t.fn.d_dp(grid_)});
}

MatrixField NqcleSolver::rhs(const MatrixField& p) const {
  require_same_grid(grid_, p.grid());
  const int n = p.dim();
  if (n != h_.dim()) throw MismatchError("density/Hamiltonian dims differ");
  const double hbar = grid_->hbar();

  std::optional<MatrixField> gauge;  // hbar * F(P)
  if (opts_.correction) {
    gauge.emplace(opts_.correction(p));
    require_same_grid(grid_, gauge->grid());
    *gauge *= cplx(hbar, 0.0);
  }

  const RealField rho = p.trace_real();
  const double floor = opts_.density_floor_rel * std::max(rho.max(), 0.0);

  // Flow numerators Tr(d_q Hcal P), Tr(d_p Hcal P).
  RealField num_q(grid_), num_p(grid_);
  for (std::size_t a = 0; a < term_fields_.size(); ++a) {
    const auto& tf = term_fields_[a];
    const auto& mat = h_.terms()[a].mat;
    for (std::size_t m = 0; m < grid_->size(); ++m) {
      const double tr =
          (mat.transpose().array() *
           MatrixField::ConstMap(p.block(m), n, n).array())
              .sum()
              .real();
      num_q[m] += tf.dq[m] * tr;
      num_p[m] += tf.dp[m] * tr;
    }
  }
  if (gauge) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const ComplexField gjk = gauge->entry_field(j, k);
        const ComplexField dgq = partial_q(gjk);
        const ComplexField dgp = partial_p(gjk);
        // Tr(dG P) = sum_jk (dG)_jk P_kj
        for (std::size_t m = 0; m < grid_->size(); ++m) {
          num_q[m] += (dgq[m] * p.entry(m, k, j)).real();
          num_p[m] += (dgp[m] * p.entry(m, k, j)).real();
        }
      }
    }
  }

  // Signed floor, as in mean_flow: clamping negative ringing up to +floor
  // would flip the flow there and amplify it by |rho|/floor.
  RealField vq(grid_), vp(grid_);
  for (std::size_t m = 0; m < grid_->size(); ++m) {
    double r = rho[m];
    if (std::abs(r) < floor) r = r < 0.0 ? -floor : floor;
    if (r == 0.0) continue;
    vq[m] = num_p[m] / r;
    vp[m] = -num_q[m] / r;
  }

  MatrixField out(grid_, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const ComplexField gjk = p.entry_field(j, k);
      ComplexField div(grid_);
      if (opts_.divergence == DivergenceScheme::spectral) {
        ComplexField fq = gjk, fp = gjk;
        for (std::size_t m = 0; m < grid_->size(); ++m) {
          fq[m] *= vq[m];
          fp[m] *= vp[m];
        }
        div = partial_q(fq);
        div += partial_p(fp);
      } else {
        div = upwind_divergence(gjk, vq, vp);
      }
      for (std::size_t m = 0; m < grid_->size(); ++m)
        out.entry(m, j, k) = -div[m];
    }
  }

  // Commutator: -(i/hbar) [Hcal, P] per node.
  const cplx scale(0.0, -1.0 / hbar);
  Eigen::MatrixXcd hm(n, n), comm(n, n);
  for (std::size_t m = 0; m < grid_->size(); ++m) {
    hm.setZero();
    for (std::size_t a = 0; a < term_fields_.size(); ++a)
      hm += term_fields_[a].values[m] * h_.terms()[a].mat;
    if (gauge) hm += MatrixField::ConstMap(gauge->block(m), n, n);
    const MatrixField::ConstMap pm(p.block(m), n, n);
    comm.noalias() = hm * pm;
    comm.noalias() -= pm * hm;
    MatrixField::Map(out.block(m), n, n) += scale * comm;
  }
  return out;
}

MatrixField NqcleSolver::step(const MatrixField& p, double dt) const {
  if (opts_.control.enforce_cfl) {
    const double limit = max_dt(p);
    if (dt > limit)
      throw NumericalAbort({"cfl", dt, limit, 0.0},
                           "time step exceeds CFL bound");
  }
  MatrixField next =
      detail::rk4_step(p, dt, [this](const MatrixField& y) { return rhs(y); });
  last_drift_ = next.resymmetrize();
  return next;
}

double NqcleSolver::max_dt(const MatrixField& p) const {
  const MeanFlow flow = mean_flow(p, h_, opts_.density_floor_rel);
  double vmax = 0.0;
  for (std::size_t m = 0; m < grid_->size(); ++m)
    vmax = std::max(vmax, std::hypot(flow.vq[m], flow.vp[m]));
  if (vmax <= 0.0) return std::numeric_limits<double>::infinity();
  return opts_.control.cfl * std::min(grid_->dq(), grid_->dp()) / vmax;
}

}  // namespace koopman
