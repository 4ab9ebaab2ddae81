#pragma once

#include <Eigen/Dense>
#include <array>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "koopman/config.hpp"
#include "koopman/errors.hpp"
#include "koopman/field.hpp"
#include "koopman/hybrid_hamiltonian.hpp"

namespace koopman {

inline constexpr const char kVersionString[] = "1.0.0";

struct CheckpointRecord {
  double t = 0.0;
  std::array<double, 3> n{0.0, 0.0, 0.0};
  double purity = 1.0;
  double energy = 0.0;
  double total_norm = 0.0;
  double min_rho_c = 0.0;  // of the model's primary density reading
  double boundary_mass = 0.0;
  // Smallest eigenvalue of the quantum-sector density matrix at this
  // checkpoint (the scalar models report the total norm, a 1x1 matrix).
  double rho_hat_min_eig = 0.0;
  // Both density conventions, for the metrics sidecar.
  double mass_primary = 0.0;
  double mass_modulus = 0.0;
  double min_modulus = 0.0;
};

struct RunResult {
  ExperimentConfig config;
  std::string source;  // tag in the CSV rows
  std::vector<CheckpointRecord> records;
  // Per checkpoint: the model's own density reading (kvn |chi|^2, kvh
  // momentum-map extraction, hybrid component-sum extraction, density-field
  // trace, number-basis Wigner transform)...
  std::vector<RealField> density_primary;
  // ...and the modulus reading where it differs (kvh, qcwe).
  std::vector<RealField> density_modulus;
  std::vector<std::array<double, 3>> trajectory;  // (t, q, p), mean-field model
  std::optional<AbortRecord> abort;  // set when an invariant tripped the run
  double wall_time_s = 0.0;
  std::filesystem::path directory;  // empty when nothing was written
};

// Executes the configured model.  When write_outputs is set, emits under
// out_root/<config.directory>: manifest.json (config echo, version, wall
// time, abort record), observables.csv, density_metrics.csv, checkpoint
// field snapshots (rho_primary_###.kwph, rho_modulus_###.kwph, state
// snapshots), trajectory.csv for the mean-field model.  Numerical-invariant
// failures land in `abort` instead of propagating.
RunResult run_experiment(const ExperimentConfig& cfg,
                         const std::filesystem::path& out_root,
                         bool write_outputs = true);

// Reference solutions in the same output format: characteristics for
// kvn/kvh, the exact channel solver for diagonal-family qcwe, and the
// number-basis/mean-field models as themselves.  Throws ConfigError when
// the configured model has no reference counterpart.
RunResult run_oracle(const ExperimentConfig& cfg,
                     const std::filesystem::path& out_root,
                     bool write_outputs = true);

// Reads back a directory written by run_experiment (manifest + CSV +
// density snapshots); state snapshots are not reloaded.
RunResult load_run_directory(const std::filesystem::path& dir);

// Assembly helpers (config must be validated).
HamiltonianFunction scalar_hamiltonian_from(const ExperimentConfig& cfg);
HybridHamiltonian hybrid_hamiltonian_from(const ExperimentConfig& cfg,
                                          const GridPtr& grid);
std::function<cplx(double, double)> initial_wavefunction(
    const ExperimentConfig& cfg);
Eigen::Vector2cd spin_state_from(const ExperimentConfig& cfg);
Eigen::Matrix2cd coupling_matrix_from(const ExperimentConfig& cfg);

}  // namespace koopman
