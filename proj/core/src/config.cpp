#include "koopman/config.hpp"

#include <complex>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <type_traits>

#include "koopman/presets.hpp"

namespace koopman {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct KeyValue {
  std::string section, key, value;
  int line;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const double* v, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += fmt(v[i]);
  }
  return out;
}

class Applier {
 public:
  Applier(ExperimentConfig& cfg, std::vector<ConfigViolation>& v)
      : cfg_(cfg), v_(v) {}

  void apply(const KeyValue& kv) {
    const std::string where = kv.section + "." + kv.key;
    auto bad = [&](const char* code, const std::string& msg) {
      v_.push_back({code, where, msg});
    };

    auto num = [&](double& dst) {
      char* end = nullptr;
      const double x = std::strtod(kv.value.c_str(), &end);
      if (end == kv.value.c_str() || *end != '\0')
        bad("bad-number", "expected a number, got '" + kv.value + "'");
      else
        dst = x;
    };
    auto integer = [&](auto& dst) {
      char* end = nullptr;
      const long long x = std::strtoll(kv.value.c_str(), &end, 10);
      if (end == kv.value.c_str() || *end != '\0')
        bad("bad-number", "expected an integer, got '" + kv.value + "'");
      else
        dst = static_cast<std::remove_reference_t<decltype(dst)>>(x);
    };
    auto boolean = [&](bool& dst) {
      if (kv.value == "true" || kv.value == "1")
        dst = true;
      else if (kv.value == "false" || kv.value == "0")
        dst = false;
      else
        bad("bad-boolean", "expected true/false, got '" + kv.value + "'");
    };
    auto array_n = [&](double* dst, int n) {
      std::istringstream in(kv.value);
      std::vector<double> vals;
      double x;
      while (in >> x) vals.push_back(x);
      if (!in.eof() || static_cast<int>(vals.size()) != n) {
        bad("bad-number",
            "expected " + std::to_string(n) + " numbers, got '" + kv.value + "'");
        return;
      }
      for (int i = 0; i < n; ++i) dst[i] = vals[i];
    };
    auto keyword = [&](std::string& dst,
                       std::initializer_list<const char*> allowed) {
      for (const char* a : allowed)
        if (kv.value == a) {
          dst = kv.value;
          return;
        }
      std::string opts;
      for (const char* a : allowed) {
        if (!opts.empty()) opts += ", ";
        opts += a;
      }
      bad("bad-enum", "expected one of {" + opts + "}, got '" + kv.value + "'");
    };

    const std::string& s = kv.section;
    const std::string& k = kv.key;
    if (s == "run") {
      if (k == "preset") cfg_.preset = kv.value;  // expanded by the caller
      else if (k == "model") {
        std::string m;
        keyword(m, {"kvn", "kvh", "qcwe", "nqcle", "ehrenfest", "quantum_ref"});
        if (!m.empty()) cfg_.model = model_from(m);
      } else if (k == "dt") num(cfg_.dt);
      else if (k == "t_final") num(cfg_.t_final);
      else if (k == "checkpoint_interval") num(cfg_.checkpoint_interval);
      else bad("unknown-key", "no such key in [run]");
    } else if (s == "grid") {
      if (k == "nq") integer(cfg_.nq);
      else if (k == "np") integer(cfg_.np);
      else if (k == "qmin") num(cfg_.qmin);
      else if (k == "qmax") num(cfg_.qmax);
      else if (k == "pmin") num(cfg_.pmin);
      else if (k == "pmax") num(cfg_.pmax);
      else if (k == "hbar") num(cfg_.hbar);
      else if (k == "scheme") {
        std::string m;
        keyword(m, {"spectral", "central4"});
        if (m == "spectral") cfg_.scheme = DerivativeScheme::spectral;
        else if (m == "central4") cfg_.scheme = DerivativeScheme::central4;
      } else bad("unknown-key", "no such key in [grid]");
    } else if (s == "hamiltonian") {
      if (k == "h0") array_n(cfg_.h0.data(), 6);
      else if (k == "hi") array_n(cfg_.hi.data(), 6);
      else if (k == "coupling")
        keyword(cfg_.coupling,
                {"none", "sigma_x", "sigma_y", "sigma_z", "custom"});
      else if (k == "sigma") array_n(cfg_.sigma.data(), 4);
      else if (k == "sigma_imag") array_n(cfg_.sigma_imag.data(), 4);
      else if (k == "sin_coupling_amp") num(cfg_.sin_coupling_amp);
      else if (k == "sin_coupling_k") num(cfg_.sin_coupling_k);
      else bad("unknown-key", "no such key in [hamiltonian]");
    } else if (s == "initial") {
      if (k == "kind") keyword(cfg_.initial, {"gaussian"});
      else if (k == "center_q") num(cfg_.center_q);
      else if (k == "center_p") num(cfg_.center_p);
      else if (k == "width") num(cfg_.width);
      else if (k == "phase_qp") num(cfg_.phase_qp);
      else if (k == "spin")
        keyword(cfg_.spin, {"x+", "x-", "y+", "y-", "z+", "z-"});
      else if (k == "q0") num(cfg_.q0);
      else if (k == "p0") num(cfg_.p0);
      else bad("unknown-key", "no such key in [initial]");
    } else if (s == "solver") {
      if (k == "cfl") num(cfg_.cfl);
      else if (k == "enforce_cfl") boolean(cfg_.enforce_cfl);
      else if (k == "eps_rho") num(cfg_.eps_rho);
      else if (k == "n_osc") integer(cfg_.n_osc);
      else if (k == "divergence")
        keyword(cfg_.divergence, {"spectral", "upwind"});
      else if (k == "boundary_mass_limit") num(cfg_.boundary_mass_limit);
      else if (k == "abort_on_boundary_mass")
        boolean(cfg_.abort_on_boundary_mass);
      else bad("unknown-key", "no such key in [solver]");
    } else if (s == "output") {
      if (k == "directory") cfg_.directory = kv.value;
      else if (k == "seed") integer(cfg_.seed);
      else bad("unknown-key", "no such key in [output]");
    } else {
      bad("unknown-section", "no such section [" + s + "]");
    }
  }

  static ModelKind model_from(const std::string& m) {
    if (m == "kvn") return ModelKind::kvn;
    if (m == "kvh") return ModelKind::kvh;
    if (m == "qcwe") return ModelKind::qcwe;
    if (m == "nqcle") return ModelKind::nqcle;
    if (m == "ehrenfest") return ModelKind::ehrenfest;
    return ModelKind::quantum_ref;
  }

 private:
  ExperimentConfig& cfg_;
  std::vector<ConfigViolation>& v_;
};

bool near_integer(double ratio, double tol = 1e-9) {
  return std::abs(ratio - std::round(ratio)) <= tol * std::max(1.0, ratio);
}

void validate(const ExperimentConfig& c, std::vector<ConfigViolation>& v) {
  auto bad = [&](const char* code, const std::string& where,
                 const std::string& msg) { v.push_back({code, where, msg}); };

  if (!(c.t_final > 0.0))
    bad("nonpositive-duration", "run.t_final", "t_final must be positive");
  if (!(c.dt > 0.0)) bad("nonpositive-dt", "run.dt", "dt must be positive");
  if (!(c.checkpoint_interval > 0.0)) {
    bad("checkpoint-misaligned", "run.checkpoint_interval",
        "checkpoint_interval must be positive");
  } else if (c.t_final > 0.0) {
    if (!near_integer(c.t_final / c.checkpoint_interval))
      bad("checkpoint-misaligned", "run.checkpoint_interval",
          "t_final must be an integer number of checkpoint intervals");
    const bool stepped = c.model == ModelKind::kvn || c.model == ModelKind::kvh ||
                         c.model == ModelKind::qcwe || c.model == ModelKind::nqcle ||
                         c.model == ModelKind::ehrenfest;
    if (stepped && c.dt > 0.0 && !near_integer(c.checkpoint_interval / c.dt))
      bad("checkpoint-misaligned", "run.dt",
          "checkpoint_interval must be an integer number of steps");
  }

  if (c.nq < 8 || c.nq % 2 != 0)
    bad("grid-size", "grid.nq", "grid sizes must be even and at least 8");
  if (c.np < 8 || c.np % 2 != 0)
    bad("grid-size", "grid.np", "grid sizes must be even and at least 8");
  if (!(c.qmin < c.qmax))
    bad("grid-extent", "grid.qmin", "qmin must be below qmax");
  if (!(c.pmin < c.pmax))
    bad("grid-extent", "grid.pmin", "pmin must be below pmax");
  if (!(c.hbar > 0.0))
    bad("nonpositive-hbar", "grid.hbar", "hbar must be positive");

  if (c.coupling == "custom") {
    const std::complex<double> s01(c.sigma[1], c.sigma_imag[1]);
    const std::complex<double> s10(c.sigma[2], c.sigma_imag[2]);
    if (c.sigma_imag[0] != 0.0 || c.sigma_imag[3] != 0.0 ||
        std::abs(s01 - std::conj(s10)) > 1e-12)
      bad("nonhermitian-coupling", "hamiltonian.sigma",
          "custom coupling matrix must be Hermitian");
  }

  const bool classical = c.model == ModelKind::kvn || c.model == ModelKind::kvh;
  if (classical && (c.coupling != "none" || c.sin_coupling_amp != 0.0))
    bad("classical-coupling", "hamiltonian.coupling",
        "scalar models take h0 only; remove coupling terms");

  if (!(c.width > 0.0))
    bad("nonpositive-width", "initial.width", "width must be positive");
  if (c.model == ModelKind::quantum_ref) {
    if (c.width != 1.0 || c.phase_qp != 0.0 || c.center_q != 0.0 ||
        c.center_p != 0.0)
      bad("quantum-initial-unsupported", "initial.kind",
          "the number-basis baseline ships only the ground-state product "
          "(width 1, centered, no phase)");
    if (c.sin_coupling_amp != 0.0)
      bad("quantum-nonquadratic", "hamiltonian.sin_coupling_amp",
          "the number-basis baseline requires quadratic terms");
    if (c.n_osc < 2)
      bad("bad-levels", "solver.n_osc", "need at least 2 oscillator levels");
  }

  if (!(c.cfl > 0.0))
    bad("negative-tolerance", "solver.cfl", "cfl must be positive");
  if (c.eps_rho < 0.0)
    bad("negative-tolerance", "solver.eps_rho", "eps_rho must be nonnegative");
  if (c.boundary_mass_limit < 0.0)
    bad("negative-tolerance", "solver.boundary_mass_limit",
        "boundary_mass_limit must be nonnegative");
  if (c.n_osc < 1)
    bad("bad-levels", "solver.n_osc", "n_osc must be positive");
}

}  // namespace

std::string to_string(ModelKind m) {
  switch (m) {
    case ModelKind::kvn: return "kvn";
    case ModelKind::kvh: return "kvh";
    case ModelKind::qcwe: return "qcwe";
    case ModelKind::nqcle: return "nqcle";
    case ModelKind::ehrenfest: return "ehrenfest";
    case ModelKind::quantum_ref: return "quantum_ref";
  }
  return "?";
}

ConfigError::ConfigError(std::vector<ConfigViolation> violations)
    : std::runtime_error(violations.empty()
                             ? "invalid configuration"
                             : "invalid configuration: " +
                                   violations.front().where + ": " +
                                   violations.front().message +
                                   (violations.size() > 1 ? " (+ more)" : "")),
      violations_(std::move(violations)) {}

ExperimentConfig parse_config(const std::string& text,
                              std::vector<ConfigViolation>& violations) {
  std::vector<KeyValue> entries;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        violations.push_back({"parse-error", "line " + std::to_string(lineno),
                              "malformed section header: " + line});
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      violations.push_back({"parse-error", "line " + std::to_string(lineno),
                            "expected key = value: " + line});
      continue;
    }
    KeyValue kv{section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)),
                lineno};
    if (kv.section.empty() || kv.key.empty()) {
      violations.push_back({"parse-error", "line " + std::to_string(lineno),
                            "key outside a section or empty key"});
      continue;
    }
    entries.push_back(std::move(kv));
  }

  // Preset expansion: last run.preset wins, then explicit keys override.
  ExperimentConfig cfg;
  for (const auto& kv : entries) {
    if (kv.section == "run" && kv.key == "preset") {
      if (preset_exists(kv.value)) {
        cfg = preset_config(kv.value);
      } else {
        violations.push_back({"unknown-preset", "run.preset",
                              "no preset named '" + kv.value + "'"});
      }
    }
  }

  Applier applier(cfg, violations);
  for (const auto& kv : entries) applier.apply(kv);

  validate(cfg, violations);
  return cfg;
}

ExperimentConfig parse_config(const std::string& text) {
  std::vector<ConfigViolation> violations;
  ExperimentConfig cfg = parse_config(text, violations);
  if (!violations.empty()) throw ConfigError(std::move(violations));
  return cfg;
}

std::string emit_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "[run]\n";
  if (!c.preset.empty()) out << "preset = " << c.preset << "\n";
  out << "model = " << to_string(c.model) << "\n"
      << "dt = " << fmt(c.dt) << "\n"
      << "t_final = " << fmt(c.t_final) << "\n"
      << "checkpoint_interval = " << fmt(c.checkpoint_interval) << "\n\n";

  out << "[grid]\n"
      << "nq = " << c.nq << "\n"
      << "np = " << c.np << "\n"
      << "qmin = " << fmt(c.qmin) << "\n"
      << "qmax = " << fmt(c.qmax) << "\n"
      << "pmin = " << fmt(c.pmin) << "\n"
      << "pmax = " << fmt(c.pmax) << "\n"
      << "hbar = " << fmt(c.hbar) << "\n"
      << "scheme = "
      << (c.scheme == DerivativeScheme::spectral ? "spectral" : "central4")
      << "\n\n";

  out << "[hamiltonian]\n"
      << "h0 = " << fmt(c.h0.data(), 6) << "\n"
      << "hi = " << fmt(c.hi.data(), 6) << "\n"
      << "coupling = " << c.coupling << "\n"
      << "sigma = " << fmt(c.sigma.data(), 4) << "\n"
      << "sigma_imag = " << fmt(c.sigma_imag.data(), 4) << "\n"
      << "sin_coupling_amp = " << fmt(c.sin_coupling_amp) << "\n"
      << "sin_coupling_k = " << fmt(c.sin_coupling_k) << "\n\n";

  out << "[initial]\n"
      << "kind = " << c.initial << "\n"
      << "center_q = " << fmt(c.center_q) << "\n"
      << "center_p = " << fmt(c.center_p) << "\n"
      << "width = " << fmt(c.width) << "\n"
      << "phase_qp = " << fmt(c.phase_qp) << "\n"
      << "spin = " << c.spin << "\n"
      << "q0 = " << fmt(c.q0) << "\n"
      << "p0 = " << fmt(c.p0) << "\n\n";

  out << "[solver]\n"
      << "cfl = " << fmt(c.cfl) << "\n"
      << "enforce_cfl = " << (c.enforce_cfl ? "true" : "false") << "\n"
      << "eps_rho = " << fmt(c.eps_rho) << "\n"
      << "n_osc = " << c.n_osc << "\n"
      << "divergence = " << c.divergence << "\n"
      << "boundary_mass_limit = " << fmt(c.boundary_mass_limit) << "\n"
      << "abort_on_boundary_mass = "
      << (c.abort_on_boundary_mass ? "true" : "false") << "\n\n";

  out << "[output]\n"
      << "directory = " << c.directory << "\n"
      << "seed = " << c.seed << "\n";
  return out.str();
}

GridPtr make_grid_from(const ExperimentConfig& c) {
  return make_grid(c.nq, c.np, {c.qmin, c.qmax, c.pmin, c.pmax}, c.hbar,
                   c.scheme);
}

}  // namespace koopman
