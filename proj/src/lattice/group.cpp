#include "solvlie/lattice/group.hpp"

#include "solvlie/errors.hpp"

namespace solvlie::lattice {

GroupElement group_mul(GroupKind kind, const GroupElement& a, const GroupElement& b) {
  if (kind == GroupKind::Nilpotent) return {a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y};
  return {a.x + b.x, a.y + std::exp(a.x) * b.y, a.z + std::exp(-a.x) * b.z};
}

GroupElement group_inverse(GroupKind kind, const GroupElement& g) {
  if (kind == GroupKind::Nilpotent) return {-g.x, -g.y, -g.z + g.x * g.y};
  return {-g.x, -std::exp(-g.x) * g.y, -std::exp(g.x) * g.z};
}

Eigen::MatrixXcd matrix_form(GroupKind kind, const GroupElement& g) {
  if (kind == GroupKind::Nilpotent) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
    m(0, 1) = g.x;
    m(0, 2) = g.z;
    m(1, 2) = g.y;
    return m;
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
  m(0, 0) = std::exp(g.x);
  m(1, 1) = std::exp(-g.x);
  m(0, 3) = g.y;
  m(1, 3) = g.z;
  m(2, 3) = g.x;
  return m;
}

GroupElement from_matrix_form(GroupKind kind, const Eigen::MatrixXcd& m) {
  if (kind == GroupKind::Nilpotent) {
    if (m.rows() != 3 || m.cols() != 3) throw DimensionError("expected a 3x3 matrix");
    return {m(0, 1), m(1, 2), m(0, 2)};
  }
  if (m.rows() != 4 || m.cols() != 4) throw DimensionError("expected a 4x4 matrix");
  return {m(2, 3), m(0, 3), m(1, 3)};
}

}  // namespace solvlie::lattice
