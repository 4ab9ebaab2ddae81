#include <fftw3.h>

#include <complex>
#include <mutex>

#include "koopman/grid.hpp"

namespace koopman::detail {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
fftw_complex* cast(std::complex<double>* p) {
  return reinterpret_cast<fftw_complex*>(p);
}
}  // namespace

// Plans are created once per grid with FFTW_UNALIGNED so they can be executed
// on any buffer via the new-array interface.  fftw_execute_dft is thread-safe;
// only planning needs the global lock.
class SpectralEngine {
 public:
  SpectralEngine(int nq, int np) : nq_(nq), np_(np) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_complex* buf = fftw_alloc_complex(static_cast<std::size_t>(nq) * np);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    // Lines along p are contiguous (stride 1, dist np); lines along q are
    // strided (stride np, dist 1).
    p_fwd_ = fftw_plan_many_dft(1, &np_, nq_, buf, nullptr, 1, np_, buf,
                                nullptr, 1, np_, FFTW_FORWARD, flags);
    p_bwd_ = fftw_plan_many_dft(1, &np_, nq_, buf, nullptr, 1, np_, buf,
                                nullptr, 1, np_, FFTW_BACKWARD, flags);
    q_fwd_ = fftw_plan_many_dft(1, &nq_, np_, buf, nullptr, np_, 1, buf,
                                nullptr, np_, 1, FFTW_FORWARD, flags);
    q_bwd_ = fftw_plan_many_dft(1, &nq_, np_, buf, nullptr, np_, 1, buf,
                                nullptr, np_, 1, FFTW_BACKWARD, flags);
    full_fwd_ = fftw_plan_dft_2d(nq_, np_, buf, buf, FFTW_FORWARD, flags);
    full_bwd_ = fftw_plan_dft_2d(nq_, np_, buf, buf, FFTW_BACKWARD, flags);
    fftw_free(buf);
  }

  ~SpectralEngine() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(p_fwd_);
    fftw_destroy_plan(p_bwd_);
    fftw_destroy_plan(q_fwd_);
    fftw_destroy_plan(q_bwd_);
    fftw_destroy_plan(full_fwd_);
    fftw_destroy_plan(full_bwd_);
  }

  void axis(Axis ax, Direction dir, const std::complex<double>* in,
            std::complex<double>* out) const {
    fftw_plan plan = (ax == Axis::q) ? (dir == Direction::forward ? q_fwd_ : q_bwd_)
                                     : (dir == Direction::forward ? p_fwd_ : p_bwd_);
    fftw_execute_dft(plan, cast(const_cast<std::complex<double>*>(in)), cast(out));
  }

  void full(Direction dir, const std::complex<double>* in,
            std::complex<double>* out) const {
    fftw_plan plan = dir == Direction::forward ? full_fwd_ : full_bwd_;
    fftw_execute_dft(plan, cast(const_cast<std::complex<double>*>(in)), cast(out));
  }

 private:
  int nq_, np_;
  fftw_plan p_fwd_, p_bwd_, q_fwd_, q_bwd_, full_fwd_, full_bwd_;
};

}  // namespace koopman::detail

namespace koopman {

void PhaseSpaceGrid::fft_axis(detail::Axis axis, detail::Direction dir,
                              const std::complex<double>* in,
                              std::complex<double>* out) const {
  fft_->axis(axis, dir, in, out);
}

void PhaseSpaceGrid::fft_2d(detail::Direction dir,
                            const std::complex<double>* in,
                            std::complex<double>* out) const {
  fft_->full(dir, in, out);
}

namespace detail {
void EngineDeleter::operator()(SpectralEngine* e) const { delete e; }

std::unique_ptr<SpectralEngine, EngineDeleter> make_engine(int nq, int np) {
  return std::unique_ptr<SpectralEngine, EngineDeleter>(
      new SpectralEngine(nq, np));
}
}  // namespace detail

}  // namespace koopman
