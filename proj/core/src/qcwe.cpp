#include "koopman/qcwe.hpp"

#include <algorithm>
#include <limits>

#include "koopman/characteristics.hpp"

namespace koopman {

QcweSolver::QcweSolver(GridPtr grid, HybridHamiltonian h, StepControl control)
    : grid_(std::move(grid)), h_(std::move(h)), control_(control), vmax_(0.0) {
  term_fields_.reserve(h_.terms().size());
  for (const auto& t : h_.terms()) {
    const bool ident = t.mat.isIdentity(0.0);
    term_fields_.push_back(
        {t.fn.d_dq(grid_), t.fn.d_dp(grid_), t.fn.lagrangian(grid_), ident});
  }
  vmax_ = h_.max_flow_speed(grid_);
}

double QcweSolver::max_dt() const {
  if (vmax_ <= 0.0) return std::numeric_limits<double>::infinity();
  return control_.cfl * std::min(grid_->dq(), grid_->dp()) / vmax_;
}

HybridWavefunction QcweSolver::rhs(const HybridWavefunction& psi) const {
  require_same_grid(grid_, psi.grid());
  const int n = psi.dim();
  if (n != h_.dim()) throw MismatchError("wavefunction/Hamiltonian dims differ");

  std::vector<ComplexField> dq_comp, dp_comp;
  dq_comp.reserve(n);
  dp_comp.reserve(n);
  for (int j = 0; j < n; ++j) {
    dq_comp.push_back(partial_q(psi.component(j)));
    dp_comp.push_back(partial_p(psi.component(j)));
  }

  HybridWavefunction out(grid_, n);
  const auto mix = [&](const Eigen::MatrixXcd& mat, int row, const auto& get) {
    ComplexField acc(grid_);
    for (int k = 0; k < n; ++k) {
      const cplx w = mat(row, k);
      if (w != 0.0) acc.axpy(w, get(k));
    }
    return acc;
  };

  for (std::size_t a = 0; a < term_fields_.size(); ++a) {
    const auto& tf = term_fields_[a];
    const auto& mat = h_.terms()[a].mat;
    for (int j = 0; j < n; ++j) {
      if (tf.identity_matrix) {
        detail::accumulate_kv_generator(tf.dq, tf.dp, &tf.lagrangian,
                                        grid_->hbar(), psi.component(j),
                                        dq_comp[j], dp_comp[j],
                                        out.component(j));
      } else {
        const ComplexField v =
            mix(mat, j, [&](int k) -> const ComplexField& { return psi.component(k); });
        const ComplexField vq =
            mix(mat, j, [&](int k) -> const ComplexField& { return dq_comp[k]; });
        const ComplexField vp =
            mix(mat, j, [&](int k) -> const ComplexField& { return dp_comp[k]; });
        detail::accumulate_kv_generator(tf.dq, tf.dp, &tf.lagrangian,
                                        grid_->hbar(), v, vq, vp,
                                        out.component(j));
      }
    }
  }
  return out;
}

HybridWavefunction QcweSolver::step(const HybridWavefunction& psi,
                                    double dt) const {
  if (control_.enforce_cfl && dt > max_dt())
    throw NumericalAbort({"cfl", dt, max_dt(), 0.0},
                         "time step exceeds CFL bound");
  return detail::rk4_step(psi, dt,
                          [this](const HybridWavefunction& y) { return rhs(y); });
}

HybridWavefunction qcwe_rhs(const HybridWavefunction& psi,
                            const HybridHamiltonian& h) {
  return QcweSolver(psi.grid(), h).rhs(psi);
}

HybridWavefunction qcwe_step(const HybridWavefunction& psi,
                             const HybridHamiltonian& h, double dt,
                             StepControl control) {
  return QcweSolver(psi.grid(), h, control).step(psi, dt);
}

HybridWavefunction diagonal_channel_solve(
    const std::vector<std::function<cplx(double, double)>>& psi0,
    const HybridHamiltonian& h, double t, const GridPtr& grid) {
  if (!h.has_diagonal_basis())
    throw std::invalid_argument(
        "diagonal_channel_solve requires a diagonal-family Hamiltonian");
  if (!h.h0().is_quadratic() || !h.h_interaction().is_quadratic())
    throw std::invalid_argument(
        "diagonal_channel_solve requires quadratic H0 and HI");
  const int n = h.dim();
  if (static_cast<int>(psi0.size()) != n)
    throw MismatchError("initial component count differs from dim");

  const Eigen::MatrixXcd& U = h.sigma_eigenvectors();
  const Eigen::VectorXd& lam = h.sigma_eigenvalues();

  std::vector<ComplexField> channels;
  channels.reserve(n);
  for (int j = 0; j < n; ++j) {
    // (U^+ psi0)_j as a closed form.
    const Eigen::VectorXcd row = U.col(j).conjugate();
    auto rotated = [row, &psi0, n](double q, double p) {
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k) acc += row(k) * psi0[k](q, p);
      return acc;
    };
    const HamiltonianFunction channel_h = HamiltonianFunction::quadratic(
        h.h0().coeffs().plus(h.h_interaction().coeffs(), lam(j)));
    channels.push_back(characteristics_solution(rotated, channel_h, t, grid,
                                                ClassicalModel::kvh));
  }

  HybridWavefunction out(grid, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) out.component(j).axpy(U(j, k), channels[k]);
  return out;
}

}  // namespace koopman
