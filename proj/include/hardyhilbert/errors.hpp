#ifndef HARDYHILBERT_ERRORS_HPP
#define HARDYHILBERT_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace hh {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (empty sequence, zero polynomial, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Out-of-range parameter (r, beta, grid size, resolution, ...).
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Requested resolution cannot be represented on the given grid.
class ResolutionError : public ParameterError {
public:
  using ParameterError::ParameterError;
};

/// Riesz factorization refused: a root lies on (or numerically on) the unit circle.
class FactorizationSingular : public Error {
public:
  FactorizationSingular(const std::string& what, std::complex<double> root)
      : Error(what), root_(root) {}
  std::complex<double> root() const noexcept { return root_; }

private:
  std::complex<double> root_;
};

/// An iterative or truncated computation missed its tolerance.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

}  // namespace hh

#endif  // HARDYHILBERT_ERRORS_HPP
