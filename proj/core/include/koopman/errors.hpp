#pragma once

#include <stdexcept>
#include <string>

namespace koopman {

enum class GridErrorCode {
  odd_size,
  too_small,
  inverted_extents,
  nonpositive_hbar,
};

class GridError : public std::invalid_argument {
 public:
  GridError(GridErrorCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  GridErrorCode code() const { return code_; }

 private:
  GridErrorCode code_;
};

// Thrown when two fields that must share a grid (or matrix dimension) do not.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A runtime guard tripped mid-run: CFL bound, boundary-mass leak, basis
// truncation tail, non-finite values.  Carries a machine-readable record so
// drivers can serialize it.
struct AbortRecord {
  std::string invariant;  // e.g. "cfl", "boundary_mass", "truncation_tail"
  double value = 0.0;
  double limit = 0.0;
  double time = 0.0;
};

class NumericalAbort : public std::runtime_error {
 public:
  NumericalAbort(AbortRecord record, const std::string& what)
      : std::runtime_error(what), record_(std::move(record)) {}
  const AbortRecord& record() const { return record_; }

 private:
  AbortRecord record_;
};

}  // namespace koopman
