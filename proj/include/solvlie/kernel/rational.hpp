#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

namespace solvlie {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exact rational number, always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Parses "p", "-p", "p/q" (whitespace allowed around tokens). Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

inline bool is_zero(const BigInt& x) { return x.is_zero(); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Element of Q(i). Used for exact computations in complexified algebras.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit lift from Q
  GaussianRational(int r) : re(r) {}                  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);
};

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

inline bool is_zero_scalar(const Rational& x) { return x.is_zero(); }
inline bool is_zero_scalar(const GaussianRational& x) { return x.is_zero(); }
inline bool is_zero_scalar(double x) { return x == 0.0; }
inline bool is_zero_scalar(const std::complex<double>& x) { return x == 0.0; }

// Scalar lifting used by the generic bracket and matrix code.
template <class T>
T lift(const Rational& r);

template <>
inline Rational lift<Rational>(const Rational& r) { return r; }
template <>
inline GaussianRational lift<GaussianRational>(const Rational& r) { return GaussianRational(r); }
template <>
inline double lift<double>(const Rational& r) { return to_double(r); }
template <>
inline std::complex<double> lift<std::complex<double>>(const Rational& r) { return {to_double(r), 0.0}; }

}  // namespace solvlie
