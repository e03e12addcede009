#pragma once

#include <stdexcept>
#include <utility>
#include <string>

namespace hop {

/// Base for every error the engine raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown root system, negative multiplicity, malformed config.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant failed. `invariant()` names which one.
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

/// Size caps (downset limit, Weyl group cap, truncation order, float overflow).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// No regular direction separated the shifted spectra.
class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

/// A persisted cache entry does not match its recorded digest.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace hop
