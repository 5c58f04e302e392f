#pragma once

#include "solvlie/kernel/matrix.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace solvlie {

/// Tolerance used wherever an operation does not take one explicitly.
inline constexpr double kDefaultTol = 1e-9;

/// Solves basis * c = v, rounds c to the nearest integers and returns them iff
/// every coordinate is within `tol` of its rounding. Throws SingularityError for a
/// singular basis.
std::optional<std::vector<long long>> integer_recover(const Eigen::VectorXd& v, const Eigen::MatrixXd& basis,
                                                      double tol);

Eigen::MatrixXd to_eigen(const QMatrix& m);
Eigen::MatrixXd to_eigen(const IntMatrix& m);
Eigen::MatrixXcd to_eigen(const CQMatrix& m);

}  // namespace solvlie
