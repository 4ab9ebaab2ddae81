#pragma once

#include <filesystem>

#include "koopman/runner.hpp"

namespace koopman {

struct CompareOptions {
  // Density reading taken from run A for the L1 column: "auto" fixes the
  // reading that minimizes the distance at the first shared checkpoint and
  // keeps it for every later time; "primary"/"modulus" force one.
  std::string convention = "auto";
  double time_tolerance = 1e-9;
};

struct CheckpointComparison {
  double t = 0.0;
  double bloch_deviation = 0.0;  // euclidean |n_A - n_B|
  double purity_gap = 0.0;       // purity_B - purity_A
  double density_l1 = 0.0;       // A minus B's density, resampled onto A's grid
  double energy_a = 0.0;
  double energy_b = 0.0;
};

struct ComparisonReport {
  std::string convention_used;  // "primary" | "modulus" | "none"
  std::vector<CheckpointComparison> rows;
  double max_bloch_deviation = 0.0;
  double max_density_l1 = 0.0;
  double min_purity_gap = 0.0;
  double energy_drift_a = 0.0;  // max |E(t) - E(0)| / max(1, |E(0)|)
  double energy_drift_b = 0.0;
};

// Aligns checkpoints by time and compares observables plus the density
// snapshots (B resampled onto A's grid when resolutions differ).
ComparisonReport compare_runs(const RunResult& a, const RunResult& b,
                              const CompareOptions& opts = {});

// Directory form; writes report.json and metrics.csv into out_dir.
ComparisonReport compare_directories(const std::filesystem::path& dir_a,
                                     const std::filesystem::path& dir_b,
                                     const std::filesystem::path& out_dir,
                                     const CompareOptions& opts = {});

// Band-limited (trigonometric) resampling onto another grid; pass-through
// when shape and extents already match.
RealField resample(const RealField& src, const GridPtr& dst);

}  // namespace koopman
