#pragma once

#include <string>
#include <vector>

#include "koopman/config.hpp"

namespace koopman {

// Shipped experiment presets:
//   figure1          spin-1/2 hybrid wave run, H0 = (p^2+q^2)/2,
//                    HI = (q^2-p^2)/4 + 1/2, sigma_z coupling, t in [0,10]
//   figure1_quantum  number-basis baseline for the same setup
//   kvh_oscillator   scalar harmonic run with the phase term
//   kvn_oscillator   scalar harmonic run without it
//   free_particle    H = p^2/2 shear flow
//   nqcle_figure1    density-field run of the figure1 setup, t in [0,2]
//   signdef_exhibit  figure1 plus a sin(pi q/4) sigma_x coupling: drives the
//                    momentum-map density measurably negative
std::vector<std::string> preset_names();
bool preset_exists(const std::string& name);
ExperimentConfig preset_config(const std::string& name);  // throws if absent

}  // namespace koopman
