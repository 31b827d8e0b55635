#pragma once

#include <stdexcept>
#include <string>

namespace geoflow {

// Root of every error thrown by the library. `kind()` is a stable
// machine-readable tag; the CLI writes it into the run manifest.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

  // Numerical errors (blow-up, non-convergence) as opposed to bad input.
  virtual bool numerical() const noexcept { return false; }

 private:
  std::string kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("invalid_argument", what) {}
};

class GridMismatch : public Error {
 public:
  explicit GridMismatch(const std::string& what) : Error("grid_mismatch", what) {}
};

class NumericalError : public Error {
 public:
  using Error::Error;
  bool numerical() const noexcept override { return true; }
};

class DegenerateDiffeo : public NumericalError {
 public:
  explicit DegenerateDiffeo(const std::string& what)
      : NumericalError("degenerate_diffeo", what) {}
};

class InversionFailure : public NumericalError {
 public:
  explicit InversionFailure(const std::string& what)
      : NumericalError("inversion_failure", what) {}
};

// Raised when an integration leaves the diffeomorphism group (slope floor)
// or the velocity explodes.
class BlowUp : public NumericalError {
 public:
  BlowUp(double t, const std::string& what)
      : NumericalError("blow_up", what), time_(t) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

class OutOfNeighborhood : public NumericalError {
 public:
  explicit OutOfNeighborhood(const std::string& what)
      : NumericalError("out_of_neighborhood", what) {}
};

class PastBlowUp : public NumericalError {
 public:
  explicit PastBlowUp(const std::string& what) : NumericalError("past_blow_up", what) {}
};

class ResolutionError : public NumericalError {
 public:
  explicit ResolutionError(const std::string& what)
      : NumericalError("resolution", what) {}
};

}  // namespace geoflow
