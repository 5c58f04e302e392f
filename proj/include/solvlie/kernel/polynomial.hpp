#pragma once

#include "solvlie/kernel/matrix.hpp"
#include "solvlie/kernel/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace solvlie {

/// Polynomial with integer coefficients, lowest degree first.
/// The coefficient list is trimmed so the leading coefficient is nonzero;
/// the zero polynomial has an empty list and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }

  std::complex<double> evaluate(std::complex<double> t) const;
  IntPolynomial derivative() const;

  /// Human-readable form in the variable t, highest degree first: "t^4 - t^3 + 3 t^2 - t + 1".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Characteristic polynomial det(tI - M), computed exactly (Faddeev-LeVerrier with exact division).
IntPolynomial char_poly(const IntMatrix& m);

/// Minimal polynomial over Q of an integer matrix. It is monic with integer coefficients.
IntPolynomial minimal_poly(const IntMatrix& m);

/// True iff the minimal polynomial is squarefree, i.e. M is semisimple over C.
bool min_poly_squarefree(const IntMatrix& m);

/// Monic gcd over Q of two integer polynomials, scaled back to a primitive integer polynomial.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Companion matrix whose characteristic polynomial is the monic `p`.
IntMatrix companion(const IntPolynomial& p);

/// Palindromic coefficient sequence: roots are closed under r -> 1/r.
bool is_reciprocal(const IntPolynomial& p);

struct RootFinderOptions {
  int max_iterations = 500;
  double step_tolerance = 1e-12;
};

/// All complex roots by Durand-Kerner iteration on the monic normalization.
/// Each root r satisfies |p(r)| / sum|coeff| < tol; the result is sorted by (re, im).
/// Throws ConvergenceError (carrying the last iterate) when that cannot be met.
std::vector<std::complex<double>> poly_roots(const IntPolynomial& p, double tol = 1e-9,
                                             const RootFinderOptions& options = {});

}  // namespace solvlie
