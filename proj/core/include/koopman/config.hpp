#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "koopman/grid.hpp"

namespace koopman {

enum class ModelKind { kvn, kvh, qcwe, nqcle, ehrenfest, quantum_ref };

std::string to_string(ModelKind m);

// One validation failure; parsing reports every violation, not the first.
struct ConfigViolation {
  std::string code;     // stable kebab-case identifier
  std::string where;    // "section.key" (or section) it concerns
  std::string message;  // human-readable detail
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<ConfigViolation> violations);
  const std::vector<ConfigViolation>& violations() const { return violations_; }

 private:
  std::vector<ConfigViolation> violations_;
};

struct ExperimentConfig {
  // [run]
  std::string preset;  // optional; expanded before explicit keys apply
  ModelKind model = ModelKind::qcwe;
  double dt = 1e-3;
  double t_final = 10.0;
  double checkpoint_interval = 1.0;

  // [grid]
  int nq = 128, np = 128;
  double qmin = -8.0, qmax = 8.0, pmin = -8.0, pmax = 8.0;
  double hbar = 1.0;
  DerivativeScheme scheme = DerivativeScheme::spectral;

  // [hamiltonian]  H = h0(q,p) 1 + hi(q,p) Sigma + sin_amp sin(sin_k q) sigma_x
  std::array<double, 6> h0{0.5, 0.5, 0, 0, 0, 0};  // a,b,c,d,e,f
  std::array<double, 6> hi{0, 0, 0, 0, 0, 0};
  std::string coupling = "none";  // none | sigma_x | sigma_y | sigma_z | custom
  std::array<double, 4> sigma{0, 0, 0, 0};       // row-major Re, used by custom
  std::array<double, 4> sigma_imag{0, 0, 0, 0};  // row-major Im
  double sin_coupling_amp = 0.0;
  double sin_coupling_k = 0.0;

  // [initial]
  std::string initial = "gaussian";  // the only shipped family
  double center_q = 0.0, center_p = 0.0;
  double width = 1.0;      // |chi|^2 ~ exp(-((q-cq)^2+(p-cp)^2)/width^2)
  double phase_qp = 0.0;   // multiplies exp(i * phase_qp * q p / hbar)
  std::string spin = "x+";  // x+ x- y+ y- z+ z-
  double q0 = 0.0, p0 = 0.0;  // trajectory models

  // [solver]
  double cfl = 0.5;
  bool enforce_cfl = true;
  double eps_rho = 1e-12;
  int n_osc = 32;
  std::string divergence = "spectral";  // spectral | upwind
  double boundary_mass_limit = 1e-6;
  bool abort_on_boundary_mass = true;

  // [output]
  std::string directory = "out";
  unsigned long seed = 0;

  bool operator==(const ExperimentConfig&) const = default;
};

// Parses INI-style text ([section], key = value, # or ; comments).  A
// "preset" key expands first; explicit keys override preset values.  Throws
// ConfigError carrying every violation found.
ExperimentConfig parse_config(const std::string& text);

// Collect violations without throwing; returns the config with whatever
// could be applied (meaningful only when the list comes back empty).
ExperimentConfig parse_config(const std::string& text,
                              std::vector<ConfigViolation>& violations);

// Full round-trip emission: parse_config(emit_config(c)) == c.
std::string emit_config(const ExperimentConfig& c);

GridPtr make_grid_from(const ExperimentConfig& c);

}  // namespace koopman
