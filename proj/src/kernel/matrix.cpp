#include "solvlie/kernel/matrix.hpp"

#include <boost/multiprecision/integer.hpp>

namespace solvlie {

namespace {

// Runs Bareiss in place; returns the rank and sets `sign` to the parity of row swaps.
std::size_t bareiss_eliminate(IntMatrix& m, int& sign) {
  const std::size_t rows = m.rows(), cols = m.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

BigInt bareiss_determinant(IntMatrix m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  int sign = 1;
  const std::size_t r = bareiss_eliminate(m, sign);
  if (r < m.rows()) return 0;
  return sign * m(m.rows() - 1, m.cols() - 1);
}

std::size_t bareiss_rank(IntMatrix m) {
  int sign = 1;
  return bareiss_eliminate(m, sign);
}

std::size_t rank(const QMatrix& m) {
  IntMatrix scaled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, BigInt(denominator(m(i, j))));
    for (std::size_t j = 0; j < m.cols(); ++j)
      scaled(i, j) = BigInt(numerator(m(i, j))) * (l / BigInt(denominator(m(i, j))));
  }
  return bareiss_rank(std::move(scaled));
}

IntMatrix to_int_matrix(const std::vector<std::vector<long long>>& rows) {
  const std::size_t n = rows.size(), c = n ? rows.front().size() : 0;
  IntMatrix m(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix to_rational(const IntMatrix& m) {
  return m.map<Rational>([](const BigInt& x) { return Rational(x); });
}

}  // namespace solvlie
