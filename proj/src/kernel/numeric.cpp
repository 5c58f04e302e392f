#include "solvlie/kernel/numeric.hpp"

#include <cmath>

namespace solvlie {

std::optional<std::vector<long long>> integer_recover(const Eigen::VectorXd& v, const Eigen::MatrixXd& basis,
                                                      double tol) {
  if (basis.rows() != basis.cols() || basis.rows() != v.size())
    throw DimensionError("integer_recover: basis must be square and match the vector length");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw SingularityError("integer_recover: singular basis");
  const Eigen::VectorXd c = lu.solve(v);
  std::vector<long long> out(static_cast<std::size_t>(c.size()));
  double residual = 0.0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double r = std::round(c[i]);
    residual = std::max(residual, std::abs(c[i] - r));
    out[static_cast<std::size_t>(i)] = static_cast<long long>(r);
  }
  if (!(residual < tol)) return std::nullopt;
  return out;
}

Eigen::MatrixXd to_eigen(const QMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

Eigen::MatrixXd to_eigen(const IntMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).convert_to<double>();
  return out;
}

Eigen::MatrixXcd to_eigen(const CQMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

}  // namespace solvlie
