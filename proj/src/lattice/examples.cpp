#include "solvlie/lattice/examples.hpp"

#include "solvlie/kernel/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace solvlie::lattice {

namespace {

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

template <std::size_t N>
std::array<cd, N> to_array(const Eigen::VectorXcd& v) {
  std::array<cd, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = v[static_cast<Eigen::Index>(k)];
  return out;
}

}  // namespace

Eigen::VectorXcd unit_eigenvector(const Eigen::MatrixXcd& m, cd s) {
  const Eigen::MatrixXcd shifted = m - s * Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
  Eigen::VectorXcd v = svd.matrixV().col(m.cols() - 1);
  Eigen::Index big = 0;
  v.cwiseAbs().maxCoeff(&big);
  v *= std::conj(v[big]) / std::abs(v[big]);
  v[big] = std::abs(v[big]);
  return v.normalized();
}

LatticeSpecNil iwasawa_spec() {
  LatticeSpecNil s;
  s.a = IntMatrix{{0, -1}, {1, 0}};
  s.lambda = cd(0, 1);
  s.alpha = {cd(0), cd(0)};
  s.beta = {cd(1), cd(0, 1)};
  return s;
}

LatticeSpecNil nil_spec(const IntMatrix& a, std::array<cd, 2> beta) {
  const auto roots = poly_roots(char_poly(a));
  const cd lambda = roots.front().imag() > 0 ? roots.front() : roots.back();
  if (std::abs(lambda.imag()) < 1e-9) throw ClassificationError("nil_spec: A has real eigenvalues");
  LatticeSpecNil s;
  s.a = a;
  s.lambda = lambda;
  s.alpha = to_array<2>(unit_eigenvector(to_eigen(a).cast<cd>(), lambda));
  s.beta = beta;
  return s;
}

IntMatrix example2_matrix() { return IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 1, -3, 1}}; }

LatticeSpecSolv type3a_spec(const IntMatrix& a, long long k_mu) {
  const auto roots = poly_roots(char_poly(a));
  cd gamma = 0.0;
  for (const auto& r : roots)
    if (r.imag() > 1e-9 && std::abs(r) > std::abs(gamma)) gamma = r;
  if (std::abs(gamma) <= 1.0 + 1e-9) throw ClassificationError("type3a_spec: no non-real eigenvalue off the unit circle");
  const Eigen::MatrixXcd ac = to_eigen(a).cast<cd>();
  LatticeSpecSolv s;
  s.a = a;
  s.b = IntMatrix::identity(4);
  s.gamma = gamma;
  s.k_mu = k_mu;
  s.delta = std::exp(cd(0.0, static_cast<double>(k_mu) * std::numbers::pi));
  if (k_mu % 2 == 0) s.delta = 1.0;  // e^{2 pi i n} is exactly 1
  s.alpha = to_array<4>(unit_eigenvector(ac, 1.0 / gamma));
  s.beta = to_array<4>(unit_eigenvector(ac, gamma));
  return s;
}

LatticeSpecSolv example2_spec(long long k_mu) { return type3a_spec(example2_matrix(), k_mu); }

LatticeSpecSolv example3_spec(const IntMatrix& a0, cd epsilon, long long k_mu) {
  if (a0.rows() != 2 || a0.cols() != 2) throw DimensionError("example3_spec: A0 must be 2x2");
  const auto roots = poly_roots(char_poly(a0));
  const double gamma = std::abs(roots.front().real()) > std::abs(roots.back().real()) ? roots.front().real()
                                                                                       : roots.back().real();
  if (std::abs(roots.front().imag()) > 1e-9 || std::abs(std::abs(gamma) - 1.0) < 1e-9)
    throw ClassificationError("example3_spec: A0 must be hyperbolic");
  const Eigen::MatrixXcd ac = to_eigen(a0).cast<cd>();
  const Eigen::VectorXcd a = unit_eigenvector(ac, 1.0 / gamma);
  const Eigen::VectorXcd b = unit_eigenvector(ac, gamma);
  LatticeSpecSolv s;
  s.a = direct_sum(a0, a0);
  s.b = IntMatrix::identity(4);
  s.gamma = gamma;
  s.k_mu = k_mu;
  s.delta = k_mu % 2 == 0 ? cd(1.0) : cd(-1.0);
  s.alpha = {a[0].real(), a[1].real(), a[0].real() * epsilon, a[1].real() * epsilon};
  s.beta = {b[0].real(), b[1].real(), b[0].real() * epsilon, b[1].real() * epsilon};
  return s;
}

LatticeSpecSolv example3_spec() { return example3_spec(IntMatrix{{2, 1}, {1, 1}}); }

IntMatrix random_hyperbolic_sl2(std::mt19937_64& rng, int max_entry) {
  const std::array<IntMatrix, 4> gens{IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{1, -1}, {0, 1}}, IntMatrix{{1, 0}, {1, 1}},
                                      IntMatrix{{1, 0}, {-1, 1}}};
  std::uniform_int_distribution<int> pick(0, 3), length(2, 8), coin(0, 1);
  for (;;) {
    IntMatrix m = IntMatrix::identity(2);
    for (int k = length(rng); k > 0; --k) m = m * gens[static_cast<std::size_t>(pick(rng))];
    if (coin(rng)) m = -m;
    const BigInt tr = m.trace();
    bool small = true;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) small = small && abs(m(i, j)) <= max_entry;
    if (small && abs(tr) > 2) return m;
  }
}

IntMatrix random_type3a_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (;;) {
    const long long a = coeff(rng), b = coeff(rng);
    const IntPolynomial p{1, a, b, a, 1};
    if (!min_poly_squarefree(companion(p))) continue;
    const auto roots = poly_roots(p);
    const bool good = std::all_of(roots.begin(), roots.end(), [](cd r) {
      return std::abs(r.imag()) > 1e-6 && std::abs(std::abs(r) - 1.0) > 1e-6;
    });
    if (good) return companion(p);
  }
}

}  // namespace solvlie::lattice
