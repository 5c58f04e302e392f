#pragma once

#include "solvlie/lattice/spec.hpp"

#include <random>

namespace solvlie::lattice {

/// Gaussian-integer lattice of the complex Heisenberg group (Iwasawa manifold).
LatticeSpecNil iwasawa_spec();

/// Generic nilpotent-type lattice from A in GL(2, Z) with non-real eigenvalues:
/// lambda is the eigenvalue with positive imaginary part, alpha a unit eigenvector.
LatticeSpecNil nil_spec(const IntMatrix& a, std::array<cd, 2> beta = {});

/// The 4x4 companion matrix of t^4 - t^3 + 3 t^2 - t + 1.
IntMatrix example2_matrix();

/// Non-nilpotent lattice from A in SL(4, Z) with non-real eigenvalues gamma, 1/gamma, ...:
/// gamma is the eigenvalue of largest modulus with Im > 0, alpha and beta unit eigenvectors
/// for 1/gamma and gamma; B = I and mu = k_mu * pi * i, delta = e^{mu}.
LatticeSpecSolv type3a_spec(const IntMatrix& a, long long k_mu = 2);

LatticeSpecSolv example2_spec(long long k_mu = 2);

/// Real-eigenvalue construction: A = A0 (+) A0 for hyperbolic A0 in SL(2, Z), with real
/// eigenvectors a (for 1/gamma) and b (for gamma) spread as (a1, a2, a1 eps, a2 eps).
LatticeSpecSolv example3_spec(const IntMatrix& a0, cd epsilon = cd(0, 1), long long k_mu = 2);
LatticeSpecSolv example3_spec();

/// Random hyperbolic element of SL(2, Z) (|trace| > 2), entries bounded by max_entry.
IntMatrix random_hyperbolic_sl2(std::mt19937_64& rng, int max_entry = 40);

/// Companion matrix of a random palindromic quartic t^4 + a t^3 + b t^2 + a t + 1 whose
/// roots are four distinct non-real numbers off the unit circle.
IntMatrix random_type3a_matrix(std::mt19937_64& rng);

/// Unit vector spanning ker(M - s I), phase-normalized so its largest entry is real positive.
Eigen::VectorXcd unit_eigenvector(const Eigen::MatrixXcd& m, cd s);

}  // namespace solvlie::lattice
