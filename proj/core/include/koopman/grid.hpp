#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "koopman/errors.hpp"

namespace koopman {

enum class DerivativeScheme { spectral, central4 };

struct GridExtents {
  double q_min, q_max;
  double p_min, p_max;
};

namespace detail {
class SpectralEngine;
struct EngineDeleter {
  void operator()(SpectralEngine*) const;
};
enum class Axis { q, p };
enum class Direction { forward, backward };
}  // namespace detail

// Uniform periodic phase-space grid.  Node (iq, ip) sits at
// (q_min + iq*dq, p_min + ip*dp); the right/top edges are the periodic images
// of the left/bottom ones.  Storage convention everywhere: row-major with q
// as the outer index, idx = iq*np + ip.
class PhaseSpaceGrid {
 public:
  PhaseSpaceGrid(int nq, int np, GridExtents extents, double hbar,
                 DerivativeScheme scheme);
  ~PhaseSpaceGrid();
  PhaseSpaceGrid(const PhaseSpaceGrid&) = delete;
  PhaseSpaceGrid& operator=(const PhaseSpaceGrid&) = delete;

  int nq() const { return nq_; }
  int np() const { return np_; }
  std::size_t size() const { return static_cast<std::size_t>(nq_) * np_; }
  const GridExtents& extents() const { return extents_; }
  double hbar() const { return hbar_; }
  DerivativeScheme scheme() const { return scheme_; }

  double dq() const { return dq_; }
  double dp() const { return dp_; }
  double cell() const { return dq_ * dp_; }
  double length_q() const { return extents_.q_max - extents_.q_min; }
  double length_p() const { return extents_.p_max - extents_.p_min; }

  double q(int iq) const { return extents_.q_min + iq * dq_; }
  double p(int ip) const { return extents_.p_min + ip * dp_; }
  std::size_t index(int iq, int ip) const {
    return static_cast<std::size_t>(iq) * np_ + ip;
  }

  // FFT wavenumbers in fftfreq order; the Nyquist entry is zeroed so that
  // spectral differentiation maps real fields to real fields.
  const std::vector<double>& kq() const { return kq_; }
  const std::vector<double>& kp() const { return kp_; }

  // One-dimensional batched FFT over all lines along the given axis.
  // in/out may alias.  Unnormalized; backward needs a 1/n per transform.
  void fft_axis(detail::Axis axis, detail::Direction dir,
                const std::complex<double>* in, std::complex<double>* out) const;
  void fft_2d(detail::Direction dir, const std::complex<double>* in,
              std::complex<double>* out) const;

 private:
  int nq_, np_;
  GridExtents extents_;
  double hbar_;
  DerivativeScheme scheme_;
  double dq_, dp_;
  std::vector<double> kq_, kp_;
  std::unique_ptr<detail::SpectralEngine, detail::EngineDeleter> fft_;
};

using GridPtr = std::shared_ptr<const PhaseSpaceGrid>;

// Validates sizes (even, >= 8), extents and hbar; throws GridError.
GridPtr make_grid(int nq, int np, GridExtents extents, double hbar,
                  DerivativeScheme scheme = DerivativeScheme::spectral);

}  // namespace koopman
