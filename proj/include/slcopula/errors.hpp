#pragma once

#include <stdexcept>
#include <string>

namespace slc {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation, e.g. t outside [0,1].
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A function evaluation produced a non-finite value.
class NumericalDomainError : public Error {
 public:
  NumericalDomainError(const std::string& what, double abscissa)
      : Error(what), abscissa_(abscissa) {}
  double abscissa() const noexcept { return abscissa_; }

 private:
  double abscissa_;
};

/// Derivative requested at a declared kink or jump of a diagonal.
class KinkError : public Error {
 public:
  KinkError(const std::string& what, double at) : Error(what), at_(at) {}
  double at() const noexcept { return at_; }

 private:
  double at_;
};

/// Malformed diagonal, measure, or JSON description.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Operation called on an object outside the class it requires.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Piecewise-quadratic coefficients that no discrete measure produces.
class NotAMixtureError : public Error {
 public:
  using Error::Error;
};

}  // namespace slc
