#include "koopman/presets.hpp"

#include <numbers>
#include <stdexcept>

namespace koopman {

namespace {

ExperimentConfig figure1_base() {
  ExperimentConfig c;
  c.model = ModelKind::qcwe;
  c.dt = 1e-3;
  c.t_final = 10.0;
  c.checkpoint_interval = 1.0;
  c.nq = c.np = 128;
  c.qmin = c.pmin = -8.0;
  c.qmax = c.pmax = 8.0;
  c.hbar = 1.0;
  c.h0 = {0.5, 0.5, 0, 0, 0, 0};    // (p^2 + q^2)/2
  c.hi = {0.25, -0.25, 0, 0, 0, 0.5};  // (q^2 - p^2)/4 + 1/2
  c.coupling = "sigma_z";
  c.initial = "gaussian";
  c.width = 1.0;
  c.spin = "x+";  // (1,1)/sqrt(2), Bloch vector (1,0,0)
  return c;
}

ExperimentConfig scalar_oscillator(ModelKind model) {
  ExperimentConfig c;
  c.model = model;
  c.dt = 1e-3;
  c.t_final = 10.0;
  c.checkpoint_interval = 1.0;
  c.nq = c.np = 128;
  c.qmin = c.pmin = -8.0;
  c.qmax = c.pmax = 8.0;
  c.h0 = {0.5, 0.5, 0, 0, 0, 0};
  c.coupling = "none";
  return c;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"figure1",       "figure1_quantum", "kvh_oscillator",
          "kvn_oscillator", "free_particle",  "nqcle_figure1",
          "signdef_exhibit"};
}

bool preset_exists(const std::string& name) {
  for (const auto& n : preset_names())
    if (n == name) return true;
  return false;
}

ExperimentConfig preset_config(const std::string& name) {
  ExperimentConfig c;
  if (name == "figure1") {
    c = figure1_base();
  } else if (name == "figure1_quantum") {
    c = figure1_base();
    c.model = ModelKind::quantum_ref;
    c.n_osc = 32;
  } else if (name == "kvh_oscillator") {
    c = scalar_oscillator(ModelKind::kvh);
  } else if (name == "kvn_oscillator") {
    c = scalar_oscillator(ModelKind::kvn);
  } else if (name == "free_particle") {
    c = scalar_oscillator(ModelKind::kvh);
    c.h0 = {0, 0.5, 0, 0, 0, 0};
    c.t_final = 1.0;
    c.checkpoint_interval = 0.25;
  } else if (name == "nqcle_figure1") {
    c = figure1_base();
    c.model = ModelKind::nqcle;
    c.t_final = 2.0;
    c.checkpoint_interval = 0.25;
  } else if (name == "signdef_exhibit") {
    c = figure1_base();
    c.sin_coupling_amp = 0.5;
    c.sin_coupling_k = std::numbers::pi / 4.0;  // two periods across the box
    c.t_final = 2.0;
    c.checkpoint_interval = 0.25;
  } else {
    throw std::out_of_range("no preset named '" + name + "'");
  }
  c.preset = name;
  c.directory = name;
  return c;
}

}  // namespace koopman
