// Acceptance gate: eight go/no-go checks over the shipped presets and
// solvers.  Each check prints exactly one [PASS]/[FAIL] line with the
// measured numbers; the exit status is the count of failed checks.
// Reference values come from closed-form solutions (characteristics,
// channel decompositions, dense matrix exponentials) computed in-process.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "koopman/calculus.hpp"
#include "koopman/characteristics.hpp"
#include "koopman/classical_solver.hpp"
#include "koopman/compare.hpp"
#include "koopman/density_field.hpp"
#include "koopman/field.hpp"
#include "koopman/hybrid_hamiltonian.hpp"
#include "koopman/hybrid_wavefunction.hpp"
#include "koopman/momentum_map.hpp"
#include "koopman/nqcle.hpp"
#include "koopman/presets.hpp"
#include "koopman/qcwe.hpp"
#include "koopman/runner.hpp"
#include "../test_helpers.hpp"

using namespace koopman;

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Gate {
  int failures = 0;

  template <typename Body>
  void criterion(int n, const std::string& what, Body&& body) {
    bool ok = false;
    std::string detail;
    try {
      std::tie(ok, detail) = body();
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("unhandled error: ") + e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": "
              << what << " (" << detail << ")" << std::endl;
    if (!ok) ++failures;
  }
};

RunResult staged(const std::string& label, const ExperimentConfig& cfg,
                 bool oracle = false) {
  std::cerr << "  running " << label << " ..." << std::flush;
  RunResult r = oracle ? run_oracle(cfg, {}, false)
                       : run_experiment(cfg, {}, false);
  std::cerr << " " << fmt(r.wall_time_s) << " s"
            << (r.abort ? " [aborted: " + r.abort->invariant + "]" : "")
            << "\n";
  return r;
}

double norm_drift(const RunResult& r) {
  double d = 0.0;
  for (const auto& rec : r.records)
    d = std::max(d, std::abs(rec.total_norm - r.records.front().total_norm));
  return d;
}

double energy_drift(const RunResult& r) {
  const double e0 = r.records.front().energy;
  double d = 0.0;
  for (const auto& rec : r.records) d = std::max(d, std::abs(rec.energy - e0));
  return d / std::max(1.0, std::abs(e0));
}

}  // namespace

int main() {
  Gate gate;
  std::map<std::string, RunResult> runs;
  try {
    std::cerr << "staging the shipped presets\n";
    for (const auto& name : preset_names())
      runs.emplace(name, staged(name, preset_config(name)));
  } catch (const std::exception& e) {
    std::cerr << "fatal: preset staging failed: " << e.what() << "\n";
    return 8;
  }

  // 1. The hybrid run reproduces the quantum baseline qualitatively: planar
  //    Bloch rotation, never more pure than the quantum state, bounded Bloch
  //    deviation, and a unit-mass extraction with a bounded-negativity
  //    density in the convention fixed by the t=0 match.
  gate.criterion(1, "hybrid run tracks the quantum baseline", [&] {
    const RunResult& a = runs.at("figure1");
    const RunResult& b = runs.at("figure1_quantum");
    double max_nz = 0.0, mass_err = 0.0;
    for (const auto& rec : a.records) {
      max_nz = std::max(max_nz, std::abs(rec.n[2]));
      mass_err = std::max(mass_err, std::abs(rec.mass_primary - 1.0));
    }
    const ComparisonReport rep = compare_runs(a, b);
    const bool modulus = rep.convention_used == "modulus";
    double min_sel = 0.0;
    for (const auto& rec : a.records)
      min_sel = std::min(min_sel, modulus ? rec.min_modulus : rec.min_rho_c);
    const double wall = a.wall_time_s + b.wall_time_s;
    const bool ok = !a.abort && !b.abort && rep.rows.size() == 11 &&
                    max_nz <= 1e-6 && rep.min_purity_gap >= -1e-3 &&
                    rep.max_bloch_deviation < 0.35 && mass_err <= 1e-6 &&
                    min_sel >= -5e-3 && wall <= 600.0;
    return std::pair(ok, "max |n_z| " + fmt(max_nz) + ", min purity gap " +
                             fmt(rep.min_purity_gap) + ", max Bloch deviation " +
                             fmt(rep.max_bloch_deviation) + ", mass error " +
                             fmt(mass_err) + ", min density [" +
                             rep.convention_used + "] " + fmt(min_sel) + ", " +
                             fmt(wall) + " s");
  });

  // 2. The classical density reading of the hybrid solution coincides with
  //    the spin-traced phase-space transform of the quantum run at 256^2.
  //    The hybrid side uses the closed-form channel solution (criteria 1 and
  //    3 cover the stepped integrator against it).
  gate.criterion(2, "classical density coincides with the quantum reading", [&] {
    ExperimentConfig qa = preset_config("figure1");
    qa.nq = qa.np = 256;
    qa.checkpoint_interval = 2.5;
    ExperimentConfig qb = preset_config("figure1_quantum");
    qb.nq = qb.np = 256;
    qb.checkpoint_interval = 2.5;
    const RunResult a = staged("figure1 @256 (channel reference)", qa, true);
    const RunResult b = staged("figure1_quantum @256", qb);
    const ComparisonReport rep = compare_runs(a, b);
    const bool ok = !a.abort && !b.abort && rep.rows.size() == 5 &&
                    rep.max_density_l1 <= 2e-2;
    return std::pair(ok, "convention " + rep.convention_used + ", max L1 " +
                             fmt(rep.max_density_l1) +
                             " over t in {0, 2.5, 5, 7.5, 10}");
  });

  // 3. The phase-aware integrator matches the characteristics solution at
  //    t=1 on a 256^2 grid and returns to the initial state after one
  //    oscillator period (the accumulated action vanishes over a period).
  gate.criterion(3, "integrator matches characteristics and the period map", [&] {
    const auto start = std::chrono::steady_clock::now();
    ExperimentConfig cfg = preset_config("kvh_oscillator");
    cfg.nq = cfg.np = 256;
    const GridPtr grid = make_grid_from(cfg);
    const HamiltonianFunction h = scalar_hamiltonian_from(cfg);
    const auto chi0 = initial_wavefunction(cfg);
    ClassicalSolver solver(grid, h, ClassicalModel::kvh,
                           {cfg.cfl, cfg.enforce_cfl});
    const ComplexField initial = ComplexField::from_function(grid, chi0);

    ComplexField chi = initial;
    for (int s = 0; s < 1000; ++s) chi = solver.step(chi, cfg.dt);
    const ComplexField exact =
        characteristics_solution(chi0, h, 1.0, grid, ClassicalModel::kvh);
    ComplexField diff = chi;
    diff -= exact;
    const double rel_t1 = l2_norm(diff) / l2_norm(exact);

    const double period = 2.0 * std::numbers::pi;
    for (int s = 0; s < 5283; ++s) chi = solver.step(chi, cfg.dt);
    chi = solver.step(chi, period - 6283.0 * cfg.dt);
    diff = chi;
    diff -= initial;
    const double rel_period = l2_norm(diff) / l2_norm(initial);

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool ok = rel_t1 <= 1e-4 && rel_period <= 1e-4 && wall <= 120.0;
    return std::pair(ok, "rel L2 at t=1 " + fmt(rel_t1) +
                             ", after one period " + fmt(rel_period) + ", " +
                             fmt(wall) + " s");
  });

  // 4. The density extraction is the momentum map it claims to be: the
  //    defining pairing holds for six quadratic generators and three states.
  gate.criterion(4, "momentum-map pairing holds", [&] {
    const GridPtr grid = kt::grid128();
    std::vector<ComplexField> states;
    states.push_back(kt::gauss_field(grid));
    states.push_back(kt::gauss_field(grid, 1.0, -0.5, 1.2));
    states.push_back(ComplexField::from_function(grid, [](double q, double p) {
      return kt::gauss(q, p) *
             std::exp(cplx(0.0, 0.4 * std::sin(2.0 * std::numbers::pi * q / 16.0)));
    }));
    const std::vector<std::pair<std::string, QuadraticCoeffs>> gens = {
        {"q", {0, 0, 0, 1, 0, 0}},      {"p", {0, 0, 0, 0, 1, 0}},
        {"q^2", {1, 0, 0, 0, 0, 0}},    {"p^2", {0, 1, 0, 0, 0, 0}},
        {"qp", {0, 0, 1, 0, 0, 0}},     {"h0", {0.5, 0.5, 0, 0, 0, 0}}};
    double worst = 0.0;
    for (const auto& chi : states)
      for (const auto& [name, coeffs] : gens)
        worst = std::max(worst,
                         momentum_map_pairing_residual(
                             chi, HamiltonianFunction::quadratic(coeffs)));
    return std::pair(worst <= 1e-6,
                     "max residual " + fmt(worst) +
                         " over 6 generators x 3 states at 128^2");
  });

  // 5. The quantum-sector density matrix stays positive semidefinite at
  //    every checkpoint of every shipped preset.
  gate.criterion(5, "quantum-sector density stays PSD on all presets", [&] {
    double min_eig = 1.0;
    std::string where = "-";
    bool clean = true;
    for (const auto& [name, r] : runs) {
      if (r.abort) clean = false;
      for (const auto& rec : r.records)
        if (rec.rho_hat_min_eig < min_eig) {
          min_eig = rec.rho_hat_min_eig;
          where = name;
        }
    }
    return std::pair(clean && min_eig >= -1e-10,
                     "min eigenvalue " + fmt(min_eig) + " (" + where + "), " +
                         std::to_string(runs.size()) + " presets");
  });

  // 6. Conservation: norm and energy over t in [0,10] for the scalar and
  //    hybrid presets, total mass for the density-field preset.
  gate.criterion(6, "norm, energy, and mass are conserved", [&] {
    const RunResult& qc = runs.at("figure1");
    const RunResult& kv = runs.at("kvh_oscillator");
    const RunResult& nf = runs.at("nqcle_figure1");
    const double n_qc = norm_drift(qc), n_kv = norm_drift(kv);
    const double e_qc = energy_drift(qc), e_kv = energy_drift(kv);
    const double m_nf = norm_drift(nf);
    const bool ok = !qc.abort && !kv.abort && !nf.abort && n_qc <= 1e-8 &&
                    n_kv <= 1e-8 && e_qc <= 1e-6 && e_kv <= 1e-6 &&
                    m_nf <= 1e-8;
    return std::pair(ok, "norm drift " + fmt(n_qc) + " / " + fmt(n_kv) +
                             ", energy drift " + fmt(e_qc) + " / " + fmt(e_kv) +
                             ", density-field mass drift " + fmt(m_nf));
  });

  // 7. Reductions: (a) the one-component hybrid solver is the phase-aware
  //    scalar solver; (b) dropping the phase term gives the phase-free
  //    solver, exactly for a vanishing phase function and as an algebraic
  //    identity otherwise; (c) an uncoupled operator Hamiltonian factorizes
  //    the density-field evolution into transport times a spin rotation.
  gate.criterion(7, "limit cases reduce to the simpler models", [&] {
    const GridPtr grid = kt::grid128();
    const double dt = 1e-3;

    const HamiltonianFunction h_drive =
        HamiltonianFunction::quadratic({0.5, 0.5, 0.0, 0.3, -0.2, 0.1});
    ClassicalSolver scalar_kvh(grid, h_drive, ClassicalModel::kvh);
    QcweSolver hybrid1(grid, HybridHamiltonian::scalar(h_drive));
    ComplexField chi = kt::gauss_field(grid, 1.0, -0.5);
    HybridWavefunction psi(grid, 1);
    psi.component(0) = chi;
    for (int s = 0; s < 200; ++s) {
      chi = scalar_kvh.step(chi, dt);
      psi = hybrid1.step(psi, dt);
    }
    const double d_single = kt::max_abs_diff(psi.component(0), chi);

    // rhs_kvh - rhs_kvn == (i/hbar) (p d_p H - H) chi, pointwise.
    ClassicalSolver kvn_drive(grid, h_drive, ClassicalModel::kvn);
    const ComplexField probe =
        ComplexField::from_function(grid, [](double q, double p) {
          return kt::gauss(q, p, 1.0, -0.5) * std::exp(cplx(0.0, 0.4 * q));
        });
    ComplexField gap = scalar_kvh.rhs(probe);
    gap -= kvn_drive.rhs(probe);
    const QuadraticCoeffs hq{0.5, 0.5, 0.0, 0.3, -0.2, 0.1};
    ComplexField expected =
        ComplexField::from_function(grid, [&](double q, double p) {
          return cplx(0.0, hq.lagrangian(q, p)) * kt::gauss(q, p, 1.0, -0.5) *
                 std::exp(cplx(0.0, 0.4 * q));
        });
    gap -= expected;
    double d_identity = 0.0;
    for (std::size_t i = 0; i < gap.size(); ++i)
      d_identity = std::max(d_identity, std::abs(gap[i]));

    // H = 0.4 qp + p has p d_p H - H == 0: both solvers take identical steps.
    const HamiltonianFunction h_zero =
        HamiltonianFunction::quadratic({0, 0, 0.4, 0, 1.0, 0});
    ClassicalSolver a(grid, h_zero, ClassicalModel::kvh);
    ClassicalSolver b(grid, h_zero, ClassicalModel::kvn);
    ComplexField xa = kt::gauss_field(grid, 1.0, 0.0);
    ComplexField xb = xa;
    for (int s = 0; s < 100; ++s) {
      xa = a.step(xa, dt);
      xb = b.step(xb, dt);
    }
    const double d_zero_phase = kt::max_abs_diff(xa, xb);

    // Uncoupled operator Hamiltonian: oscillator transport (x) constant spin
    // rotation.  Reference: the initial blob carried along the exact flow
    // times the closed-form two-level rotation.
    const QuadraticCoeffs osc{0.5, 0.5, 0, 0, 0, 0};
    Eigen::MatrixXcd eye(2, 2), sx(2, 2);
    eye << 1, 0, 0, 1;
    sx << 0, 1, 1, 0;
    const HybridHamiltonian h_unc = HybridHamiltonian::from_terms(
        {{HamiltonianFunction::quadratic(osc), eye},
         {HamiltonianFunction::quadratic({0, 0, 0, 0, 0, 0.5}), sx}});
    NqcleSolver field_solver(grid, h_unc);
    HybridWavefunction up(grid, 2);
    up.component(0) = kt::gauss_field(grid, 1.0, 0.0);
    up.component(1) = ComplexField(grid);
    MatrixField pfield = density_from_wavefunction(up);
    const double t_end = 1.0;
    for (int s = 0; s < 1000; ++s) pfield = field_solver.step(pfield, dt);

    const AffineFlow flow(osc);
    const double c = std::cos(t_end / 2.0), sn = std::sin(t_end / 2.0);
    double d_factor = 0.0;
    for (int iq = 0; iq < grid->nq(); ++iq)
      for (int ip = 0; ip < grid->np(); ++ip) {
        const auto back = flow.apply(-t_end, grid->q(iq), grid->p(ip));
        const double d0 = std::norm(kt::gauss(back[0], back[1], 1.0, 0.0));
        const auto m = pfield.at(grid->index(iq, ip));
        d_factor = std::max(d_factor, std::abs(m(0, 0) - c * c * d0));
        d_factor = std::max(d_factor, std::abs(m(1, 1) - sn * sn * d0));
        d_factor = std::max(d_factor, std::abs(m(0, 1) - cplx(0.0, c * sn * d0)));
      }

    const bool ok = d_single <= 1e-14 && d_identity <= 1e-11 &&
                    d_zero_phase == 0.0 && d_factor <= 1e-6;
    return std::pair(ok, "single-channel diff " + fmt(d_single) +
                             ", phase-term identity " + fmt(d_identity) +
                             ", zero-phase-function diff " + fmt(d_zero_phase) +
                             ", factorized-field error " + fmt(d_factor));
  });

  // 8. The shipped non-quadratic coupled preset drives the density
  //    extraction measurably negative while the quantum sector stays PSD:
  //    sign-indefiniteness is a documented behavior, not an instability.
  gate.criterion(8, "sign-indefinite extraction exhibit", [&] {
    const RunResult& ex = runs.at("signdef_exhibit");
    double deepest = 0.0, t_at = 0.0, min_eig = 1.0;
    for (const auto& rec : ex.records) {
      if (rec.min_rho_c < deepest) {
        deepest = rec.min_rho_c;
        t_at = rec.t;
      }
      min_eig = std::min(min_eig, rec.rho_hat_min_eig);
    }
    const bool ok = !ex.abort && deepest < -1e-2 && min_eig >= -1e-10;
    return std::pair(ok, "min extraction " + fmt(deepest) + " at t = " +
                             fmt(t_at) + ", min sector eigenvalue " +
                             fmt(min_eig) + ", mass " +
                             fmt(ex.records.back().mass_primary));
  });

  std::cout << (8 - gate.failures) << " of 8 criteria passed" << std::endl;
  return gate.failures;
}
