#pragma once

#include "solvlie/kernel/matrix.hpp"

#include <Eigen/Dense>

#include <optional>
#include <random>
#include <vector>

namespace solvlie::frames {

/// Frames on the non-nilpotent real form (basis X, X', Y, Y', Z, Z'):
/// (U, U') = (X, X') Q and (V, V', W, W') = (Y, Y', Z, Z') P.
struct FramePair {
  Eigen::Matrix2d q = Eigen::Matrix2d::Identity();
  Eigen::Matrix4d p = Eigen::Matrix4d::Identity();
};

/// u = U + iU', v = V + iV', w = W + iW' in complexified coordinates.
struct FrameVectors {
  Eigen::VectorXcd u, v, w;
};

/// Throws SingularityError if Q or P is singular.
FrameVectors frame_vectors(const FramePair& fp);

/// Exact u, v, w for rational Q (2x2) and P (4x4), as a basis of the subspace they span.
std::vector<CQVector> frame_vectors_exact(const QMatrix& q, const QMatrix& p);

/// A = [[alpha, beta], [gamma, delta]] with [u, v] = 2 alpha v + 2 beta w and
/// [u, w] = 2 gamma v + 2 delta w. Throws NotSubalgebraError if either bracket leaves span(v, w).
Eigen::Matrix2cd bracket_matrix(const FramePair& fp, double tol = 1e-8);

/// Exact bracket matrix for rational Q (2x2) and P (4x4); same conventions and errors.
CQMatrix bracket_matrix_exact(const QMatrix& q, const QMatrix& p);

/// S = (ad U + ad U' o T) / 2 on span(Y, Y', Z, Z'), where T = P diag(J, J) P^-1 and
/// J = [[0, 1], [-1, 0]], so that S v = [u, v] / 2 for every v = V + iV' of the frame.
Eigen::Matrix4d s_operator(const FramePair& fp);

/// Exact version of s_operator for rational Q (2x2) and P (4x4).
QMatrix s_operator_exact(const QMatrix& q, const QMatrix& p);

/// Real 4x4 matrix M with S P = P M: blocks [[R(alpha), R(gamma)], [R(beta), R(delta)]],
/// R(c) = [[Re c, Im c], [-Im c, Re c]]. For real A this is A^T (x) I_2.
Eigen::Matrix4d frame_block(const Eigen::Matrix2cd& a);

/// Relative residual |S P - P frame_block(A)| / (|P| max(1, |S|)).
double relation_residual(const FramePair& fp, const Eigen::Matrix2cd& a);

struct Lemma2Report {
  bool q_symmetric = false;
  bool trace_nonzero = false;
  bool eigenvalues_match = false;
  Eigen::Matrix2cd a = Eigen::Matrix2cd::Zero();
  Eigen::Vector2cd eigenvalues = Eigen::Vector2cd::Zero();
  std::optional<Eigen::Matrix2d> conjugator;
  double relation_residual = 0.0;
  bool relation_ok = false;
  bool pass() const;
};

/// Checks the bracket matrix against the spectrum {-(q11 + q22) / 2, (q11 + q22) / 2}.
/// NotSubalgebraError from bracket_matrix propagates.
Lemma2Report lemma2_verify(const FramePair& fp, double tol = 1e-8);

/// Random closed frame: Q symmetric with nonzero trace and determinant,
/// P = diag(R(c1), R(c2)) (K (x) I_2) for nonzero c1, c2 and invertible real K.
FramePair random_valid_frame(std::mt19937_64& rng);

}  // namespace solvlie::frames
