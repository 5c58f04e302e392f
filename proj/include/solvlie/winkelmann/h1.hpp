#pragma once

#include "solvlie/lattice/spec.hpp"
#include "solvlie/lie/catalog.hpp"

#include <Eigen/Dense>

namespace solvlie::winkelmann {

using lattice::Classification;
using lattice::LatticeSpec;

/// dim H^1(M, O) = dim H^1(g, C) + dim W.
struct H1Report {
  int dim_h1_lie = 0;
  int dim_W = 0;
  int h1 = 0;
  Classification kind = Classification::Type1;
};

/// dim H^1(g, C) = dim g - dim [g, g], by exact rank.
int h1_lie(const lie::StructureAlgebra& g);

/// Complex dimension of [g, g] / [n, n] for a catalog kind.
int quotient_dim(lie::AlgebraKind kind);

/// On the non-nilpotent real form, ad of Y, Y', Z, Z' vanishes on span(Y, Y', Z, Z'), so
/// Ad(xi) on [g, g] / [n, n] depends only on the x-part of xi.
bool quotient_action_is_x_only();

/// Ad(exp(a X + b X')) on span_R(Y, Y', Z, Z') for x = a + b i, as exp of the ad matrix.
Eigen::Matrix4d ad_on_quotient(lattice::cd x_part);

/// Real semisimplicity: all eigenvalues real and the product of (M - l I) over the
/// distinct eigenvalues l annihilates M (squarefree, real-rooted minimal polynomial).
bool real_semisimple(const Eigen::MatrixXd& m, double tol = 1e-8);

/// Cross-check: eigenvalues real within tol and eigenvector matrix condition number < 1e8.
bool real_semisimple_by_eigenvectors(const Eigen::MatrixXd& m, double tol = 1e-8);

/// dim W via Ad-semisimplicity of all lattice generators. Throws ClassificationError for
/// invalid specs and Error if the two semisimplicity tests disagree.
int dim_W(const LatticeSpec& spec, double tol = kDefaultTol);

/// Catalog shortcut: 2 for non-nilpotent specs with gamma, delta real, else 0.
int dim_W_shortcut(const LatticeSpec& spec, double tol = kDefaultTol);

H1Report h1(const LatticeSpec& spec, double tol = kDefaultTol);

/// Table lookup by class, used to cross-check h1(spec).
H1Report h1_for_class(Classification c);

}  // namespace solvlie::winkelmann
