#include "solvlie/kernel/polynomial.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace solvlie {

namespace {

using RatPoly = std::vector<Rational>;  // lowest degree first, trimmed

void trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly r;
  for (const auto& c : p.coefficients()) r.emplace_back(c);
  return r;
}

RatPoly rat_mod(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Clears denominators and content so the result is a primitive integer polynomial
// with positive leading coefficient.
IntPolynomial primitive_part(const RatPoly& p) {
  if (p.empty()) return {};
  BigInt l = 1;
  for (const auto& c : p) l = boost::multiprecision::lcm(l, BigInt(denominator(c)));
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& c : p) {
    ints.push_back(BigInt(numerator(c)) * (l / BigInt(denominator(c))));
    g = boost::multiprecision::gcd(g, ints.back());
  }
  if (ints.back() < 0) g = -g;
  for (auto& c : ints) c /= g;
  return IntPolynomial(std::move(ints));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coeffs_.emplace_back(c);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> t) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->convert_to<double>();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long long>(k));
  return IntPolynomial(std::move(d));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    const bool show_coeff = mag != 1 || k == 0;
    if (show_coeff) os << mag;
    if (k > 0) {
      if (show_coeff) os << ' ';
      os << 't';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("char_poly: matrix must be square");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  // Every division is exact over the integers.
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  IntMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const BigInt tr = (m * mk).trace();
    if (tr % static_cast<long long>(k) != 0) throw Error("char_poly: inexact division (internal)");
    c[n - k] = -tr / static_cast<long long>(k);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial minimal_poly(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("minimal_poly: matrix must be square");
  const std::size_t n = m.rows();
  const QMatrix a = to_rational(m);
  // Krylov sequence on vec(M^k): the first power that depends on the earlier ones
  // gives the minimal polynomial.
  std::vector<QVector> powers;
  QMatrix p = QMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    QVector flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat.push_back(p(i, j));
    if (!powers.empty()) {
      const QMatrix basis = from_columns(powers, n * n);
      if (auto coeffs = solve_in_span(basis, std::span<const Rational>(flat))) {
        RatPoly poly;
        for (const auto& x : *coeffs) poly.push_back(-x);
        poly.emplace_back(1);
        return primitive_part(poly);
      }
    }
    powers.push_back(std::move(flat));
    p = p * a;
  }
  throw Error("minimal_poly: Cayley-Hamilton violated (internal)");
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  RatPoly x = to_rat(a), y = to_rat(b);
  while (!y.empty()) {
    RatPoly r = rat_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x);
}

bool min_poly_squarefree(const IntMatrix& m) {
  const IntPolynomial mp = minimal_poly(m);
  return poly_gcd(mp, mp.derivative()).degree() == 0;
}

IntMatrix companion(const IntPolynomial& p) {
  if (p.degree() < 1 || p.leading() != 1) throw DimensionError("companion: need a monic polynomial of degree >= 1");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  IntMatrix c(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = 1;
  for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = -p.coeff(j);
  return c;
}

bool is_reciprocal(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

std::vector<std::complex<double>> poly_roots(const IntPolynomial& p, double tol, const RootFinderOptions& options) {
  using cd = std::complex<double>;
  if (p.degree() < 1) throw DimensionError("poly_roots: degree must be >= 1");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  const double lead = p.leading().convert_to<double>();
  std::vector<double> monic(n + 1);
  double coeff_sum = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    monic[k] = p.coeff(k).convert_to<double>() / lead;
    coeff_sum += std::abs(p.coeff(k).convert_to<double>());
  }
  auto eval = [&](cd t) {
    cd acc = 0.0;
    for (std::size_t k = n + 1; k-- > 0;) acc = acc * t + monic[k];
    return acc;
  };
  auto eval_derivative = [&](cd t) {
    cd acc = 0.0;
    for (std::size_t k = n; k >= 1; --k) acc = acc * t + monic[k] * static_cast<double>(k);
    return acc;
  };

  // Start on a circle of radius |a0|^(1/n), rotated off the real axis.
  double radius = std::pow(std::abs(monic[0]), 1.0 / static_cast<double>(n));
  if (!(radius > 1e-3) || !std::isfinite(radius)) radius = 1.0;
  std::vector<cd> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);

  for (int it = 0; it < options.max_iterations; ++it) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cd denom = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == cd(0.0)) denom = cd(1e-300);
      const cd step = eval(z[i]) / denom;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (max_step < options.step_tolerance) break;
  }

  // A couple of Newton steps tighten simple roots; stop if one makes things worse.
  for (auto& r : z) {
    for (int k = 0; k < 2; ++k) {
      const cd d = eval_derivative(r);
      if (std::abs(d) < 1e-8) break;
      const cd next = r - eval(r) / d;
      if (std::abs(eval(next)) < std::abs(eval(r))) r = next;
    }
  }

  for (const auto& r : z) {
    const double residual = std::abs(p.evaluate(r)) / coeff_sum;
    if (!(residual < tol) || !std::isfinite(r.real()) || !std::isfinite(r.imag()))
      throw ConvergenceError("poly_roots: Durand-Kerner did not reach the residual tolerance for " + p.to_string(), z);
  }
  std::sort(z.begin(), z.end(),
            [](const cd& a, const cd& b) { return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag()); });
  return z;
}

}  // namespace solvlie
