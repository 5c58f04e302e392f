#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace solvlie {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (non-square matrix, wrong vector length...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public Error {
 public:
  using Error::Error;
};

/// The root finder hit its iteration cap; `best()` holds the last iterate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<std::complex<double>> best)
      : Error(what), best_(std::move(best)) {}
  const std::vector<std::complex<double>>& best() const { return best_; }

 private:
  std::vector<std::complex<double>> best_;
};

/// A complex subspace W fails V_C = W + conj(W) as a direct sum.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// A bracket leaves the span it was supposed to stay in.
class NotSubalgebraError : public Error {
 public:
  using Error::Error;
};

class ClassificationError : public Error {
 public:
  using Error::Error;
};

class CompatibilityError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (JSON files, rational literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace solvlie
