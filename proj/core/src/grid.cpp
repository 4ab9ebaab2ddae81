#include "koopman/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace koopman {

namespace detail {
std::unique_ptr<SpectralEngine, EngineDeleter> make_engine(int nq, int np);
}

namespace {

std::vector<double> fft_wavenumbers(int n, double length) {
  // k_j = 2*pi*j/L for j in fftfreq order; Nyquist slot set to zero.
  std::vector<double> k(n);
  const double base = 2.0 * std::numbers::pi / length;
  for (int j = 0; j < n / 2; ++j) k[j] = base * j;
  k[n / 2] = 0.0;
  for (int j = n / 2 + 1; j < n; ++j) k[j] = base * (j - n);
  return k;
}

}  // namespace

PhaseSpaceGrid::PhaseSpaceGrid(int nq, int np, GridExtents extents, double hbar,
                               DerivativeScheme scheme)
    : nq_(nq),
      np_(np),
      extents_(extents),
      hbar_(hbar),
      scheme_(scheme),
      dq_((extents.q_max - extents.q_min) / nq),
      dp_((extents.p_max - extents.p_min) / np),
      kq_(fft_wavenumbers(nq, extents.q_max - extents.q_min)),
      kp_(fft_wavenumbers(np, extents.p_max - extents.p_min)),
      fft_(detail::make_engine(nq, np)) {}

PhaseSpaceGrid::~PhaseSpaceGrid() = default;

GridPtr make_grid(int nq, int np, GridExtents extents, double hbar,
                  DerivativeScheme scheme) {
  auto check_size = [](int n, const char* name) {
    if (n < 8)
      throw GridError(GridErrorCode::too_small,
                      std::string(name) + " must be >= 8, got " + std::to_string(n));
    if (n % 2 != 0)
      throw GridError(GridErrorCode::odd_size,
                      std::string(name) + " must be even, got " + std::to_string(n));
  };
  check_size(nq, "nq");
  check_size(np, "np");
  if (!(extents.q_min < extents.q_max) || !(extents.p_min < extents.p_max))
    throw GridError(GridErrorCode::inverted_extents,
                    "grid extents must satisfy min < max");
  if (!(hbar > 0.0))
    throw GridError(GridErrorCode::nonpositive_hbar, "hbar must be positive");
  return std::make_shared<const PhaseSpaceGrid>(nq, np, extents, hbar, scheme);
}

}  // namespace koopman
