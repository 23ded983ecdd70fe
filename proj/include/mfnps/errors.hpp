#pragma once

#include <stdexcept>
#include <string>

namespace mfnps {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite, negative or otherwise out-of-domain arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Negative coupling constants; the quartic potential is unbounded below there.
class UnsupportedCouplingError : public InputError {
 public:
  using InputError::InputError;
};

/// A basis too small to hold every walk of the requested order.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// |E - E0_m| fell below the guard for a contributing intermediate state.
class SmallDenominatorError : public Error {
 public:
  SmallDenominatorError(const std::string& what, int state)
      : Error(what), state_(state) {}
  int state() const noexcept { return state_; }

 private:
  int state_;
};

/// Iterative numerical procedure failed (eigensolver, basis doubling).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A convergence measure requested on data that cannot support it.
class UndefinedMeasureError : public Error {
 public:
  using Error::Error;
};

}  // namespace mfnps
