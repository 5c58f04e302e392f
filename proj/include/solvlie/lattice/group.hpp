#pragma once

#include <Eigen/Dense>

#include <complex>

namespace solvlie::lattice {

using cd = std::complex<double>;

/// Simply connected groups C^2 x| C of the nilpotent and non-nilpotent types.
enum class GroupKind { Nilpotent, NonNilpotent };

/// Point (x, y, z) of C^3 = C^2 x| C with x the C-factor.
struct GroupElement {
  cd x{};
  cd y{};
  cd z{};
};

/// Nilpotent:     (x1+x2, y1+y2, z1+z2+x1*y2)
/// Non-nilpotent: (x1+x2, y1+e^{x1}*y2, z1+e^{-x1}*z2)
GroupElement group_mul(GroupKind kind, const GroupElement& a, const GroupElement& b);
GroupElement group_inverse(GroupKind kind, const GroupElement& g);

/// Matrix realization: 3x3 unipotent for the nilpotent group,
/// [[e^x,0,0,y],[0,e^-x,0,z],[0,0,1,x],[0,0,0,1]] for the non-nilpotent one.
Eigen::MatrixXcd matrix_form(GroupKind kind, const GroupElement& g);

/// Reads (x, y, z) back from a matrix produced by matrix_form.
GroupElement from_matrix_form(GroupKind kind, const Eigen::MatrixXcd& m);

}  // namespace solvlie::lattice
