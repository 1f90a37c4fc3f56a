#pragma once

#include <stdexcept>
#include <string>

namespace atmofv {

/// Base class of every error raised by the solver library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cell or face state violates rho > 0, p > 0 or U > 0.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Bad grid, case or run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Local hydrostatic profile has a non-positive root argument inside its cell.
class ProfileDegenerateError : public Error {
 public:
  using Error::Error;
};

/// Isentropic column evaluated above the top of the atmosphere.
class AboveAtmosphereError : public Error {
 public:
  using Error::Error;
};

/// Reconstructed density or pressure is non-positive at a face.
class PositivityError : public Error {
 public:
  using Error::Error;
};

/// Roe-averaged sound speed squared is non-positive.
class SolverBreakdownError : public Error {
 public:
  using Error::Error;
};

/// HLLC-type wave speeds coincide so a starred state is undefined.
class DegenerateWaveError : public Error {
 public:
  using Error::Error;
};

/// Exact Riemann data generates vacuum.
class VacuumError : public Error {
 public:
  using Error::Error;
};

/// Requested sample position lies outside the domain.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// I/O failure while writing output files.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A time step failed; carries the step and RK stage that raised.
class StepError : public Error {
 public:
  StepError(const std::string& what, long long step, int stage)
      : Error(what), step_(step), stage_(stage) {}
  long long step() const { return step_; }
  int stage() const { return stage_; }

 private:
  long long step_;
  int stage_;
};

}  // namespace atmofv
