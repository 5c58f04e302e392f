#include "solvlie/complex/structures.hpp"
#include "solvlie/errors.hpp"
#include "solvlie/frames/frames.hpp"
#include "solvlie/kernel/numeric.hpp"
#include "solvlie/lie/catalog.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace solvlie;
using namespace solvlie::frames;
using cd = std::complex<double>;

namespace {

// Eigenvalue of ad(aX + bX') on the weight lines Y + iY' and Z + iZ' (from [X, Y] = -Y, [X, Z] = Z):
// -(a - ib) and (a - ib), with a = q11 + i q12, b = q21 + i q22.
std::pair<cd, cd> weight_oracle(const Eigen::Matrix2d& q) {
  const cd i(0, 1);
  const cd a = q(0, 0) + i * q(0, 1), b = q(1, 0) + i * q(1, 1);
  return {-a + i * b, a - i * b};
}

Eigen::Matrix4d block_diag(cd c, cd d) {
  Eigen::Matrix4d p = Eigen::Matrix4d::Zero();
  p << c.real(), c.imag(), 0, 0, -c.imag(), c.real(), 0, 0, 0, 0, d.real(), d.imag(), 0, 0, -d.imag(), d.real();
  return p;
}

}  // namespace

TEST(FrameVectors, Identity) {
  const auto f = frame_vectors(FramePair{});
  const cd i(0, 1);
  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(6), v = u, w = u;
  u << 1, i, 0, 0, 0, 0;
  v << 0, 0, 1, i, 0, 0;
  w << 0, 0, 0, 0, 1, i;
  EXPECT_LT((f.u - u).norm(), 1e-15);
  EXPECT_LT((f.v - v).norm(), 1e-15);
  EXPECT_LT((f.w - w).norm(), 1e-15);
}

TEST(FrameVectors, Linearity) {
  FramePair fp;
  fp.q *= 2.0;
  EXPECT_LT((frame_vectors(fp).u - 2.0 * frame_vectors(FramePair{}).u).norm(), 1e-15);
  fp = FramePair{};
  fp.p = block_diag(3.0, -2.0);
  const auto f = frame_vectors(fp), f0 = frame_vectors(FramePair{});
  EXPECT_LT((f.v - 3.0 * f0.v).norm(), 1e-15);
  EXPECT_LT((f.w + 2.0 * f0.w).norm(), 1e-15);
}

TEST(FrameVectors, SingularFramesRejected) {
  FramePair fp;
  fp.q << 1, 2, 2, 4;
  EXPECT_THROW(frame_vectors(fp), SingularityError);
  fp = FramePair{};
  fp.p.col(3).setZero();
  EXPECT_THROW(frame_vectors(fp), SingularityError);
}

TEST(BracketMatrix, IdentityFrame) {
  const Eigen::Matrix2cd a = bracket_matrix(FramePair{});
  EXPECT_LT((a - Eigen::Vector2cd(-1.0, 1.0).asDiagonal().toDenseMatrix()).norm(), 1e-15);
}

TEST(BracketMatrix, ScaledBlocks) {
  FramePair fp;
  fp.p = block_diag(cd(0.5, 2.0), cd(-1.0, 0.25));
  const Eigen::Matrix2cd a = bracket_matrix(fp);
  EXPECT_LT((a - Eigen::Vector2cd(-1.0, 1.0).asDiagonal().toDenseMatrix()).norm(), 1e-14);
}

TEST(BracketMatrix, SwappedBlocks) {
  FramePair fp;
  fp.p.setZero();
  fp.p.block<2, 2>(0, 2).setIdentity();
  fp.p.block<2, 2>(2, 0).setIdentity();
  const Eigen::Matrix2cd a = bracket_matrix(fp);
  EXPECT_LT((a - Eigen::Vector2cd(1.0, -1.0).asDiagonal().toDenseMatrix()).norm(), 1e-15);
}

TEST(BracketMatrix, MatchesWeightOracle) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> d(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    FramePair fp;
    fp.q << d(rng), d(rng), d(rng), d(rng);
    fp.p = block_diag(cd(d(rng), d(rng)), cd(d(rng), d(rng)));
    if (std::abs(fp.q.determinant()) < 0.05 || std::abs(fp.p.determinant()) < 0.05) continue;
    const auto [ey, ez] = weight_oracle(fp.q);
    const Eigen::Matrix2cd a = bracket_matrix(fp);
    EXPECT_LT(std::abs(a(0, 0) - ey / 2.0), 1e-12);
    EXPECT_LT(std::abs(a(1, 1) - ez / 2.0), 1e-12);
    EXPECT_LT(std::abs(a(0, 1)) + std::abs(a(1, 0)), 1e-12);
  }
}

TEST(BracketMatrix, NotClosed) {
  // v = Y + iZ, w = Y' + iZ': [u, v] leaves span(v, w).
  FramePair fp;
  fp.p << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  EXPECT_THROW(bracket_matrix(fp), NotSubalgebraError);
  EXPECT_THROW(lemma2_verify(fp), NotSubalgebraError);
}

TEST(BracketMatrix, ExactMatchesFloating) {
  QMatrix q(2, 2);
  q(0, 0) = 3;
  q(0, 1) = q(1, 0) = Rational(1, 2);
  q(1, 1) = -1;
  QMatrix p = QMatrix::identity(4);
  p(0, 1) = 2;
  p(1, 0) = -2;
  p(2, 2) = p(3, 3) = Rational(1, 3);
  const CQMatrix a = bracket_matrix_exact(q, p);
  FramePair fp;
  fp.q = to_eigen(q);
  fp.p = to_eigen(p);
  EXPECT_LT((to_eigen(a) - bracket_matrix(fp)).norm(), 1e-14);
  CQMatrix id(2, 2);
  id(0, 0) = -1;
  id(1, 1) = 1;
  EXPECT_EQ(bracket_matrix_exact(QMatrix::identity(2), QMatrix::identity(4)), id);
  QMatrix perm(4, 4, Rational(0));
  perm(0, 0) = perm(1, 2) = perm(2, 1) = perm(3, 3) = 1;
  EXPECT_THROW(bracket_matrix_exact(QMatrix::identity(2), perm), NotSubalgebraError);
}

TEST(SOperator, IdentityFrame) {
  Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
  expected.diagonal() << -1, -1, 1, 1;
  EXPECT_LT((s_operator(FramePair{}) - expected).norm(), 1e-15);
  QMatrix exact(4, 4, Rational(0));
  exact(0, 0) = exact(1, 1) = -1;
  exact(2, 2) = exact(3, 3) = 1;
  EXPECT_EQ(s_operator_exact(QMatrix::identity(2), QMatrix::identity(4)), exact);
  EXPECT_THROW(s_operator_exact(QMatrix::identity(2), QMatrix(4, 4, Rational(0))), SingularityError);
}

TEST(SOperator, ActsAsHalfAdOnFrameVectors) {
  std::mt19937_64 rng(62);
  const auto g = lie::non_nilpotent_real_form();
  for (int trial = 0; trial < 50; ++trial) {
    const auto fp = random_valid_frame(rng);
    const auto f = frame_vectors(fp);
    const Eigen::Matrix4cd s = s_operator(fp).cast<cd>();
    for (const auto* x : {&f.v, &f.w}) {
      const Eigen::VectorXcd lhs = s * x->segment(2, 4);
      const Eigen::VectorXcd rhs = 0.5 * lie::bracket(g, f.u, *x).segment(2, 4);
      EXPECT_LT((lhs - rhs).norm(), 1e-12 * std::max(1.0, rhs.norm()));
    }
  }
}

TEST(FrameBlock, RealMatrixIsTransposeKronecker) {
  Eigen::Matrix2cd a;
  a << 1.0, 2.0, 3.0, 4.0;
  Eigen::Matrix4d expected;
  expected << 1, 0, 3, 0, 0, 1, 0, 3, 2, 0, 4, 0, 0, 2, 0, 4;
  EXPECT_EQ(frame_block(a), expected);
}

TEST(FrameSpectrum, IdentityFrame) {
  const auto r = lemma2_verify(FramePair{});
  EXPECT_TRUE(r.pass());
  EXPECT_TRUE(r.q_symmetric);
  EXPECT_TRUE(r.trace_nonzero);
  EXPECT_NEAR(r.eigenvalues[0].real(), -1.0, 1e-15);
  EXPECT_NEAR(r.eigenvalues[1].real(), 1.0, 1e-15);
  ASSERT_TRUE(r.conjugator.has_value());
  const Eigen::Matrix2d d = r.conjugator->inverse() * r.a.real() * *r.conjugator;
  EXPECT_NEAR(d(0, 1), 0.0, 1e-15);
  EXPECT_NEAR(d(1, 0), 0.0, 1e-15);
}

TEST(FrameSpectrum, DiagonalQ) {
  FramePair fp;
  fp.q = Eigen::Vector2d(3, 1).asDiagonal();
  const auto r = lemma2_verify(fp);
  EXPECT_TRUE(r.pass());
  EXPECT_NEAR(std::abs(r.eigenvalues[0] - cd(-2.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r.eigenvalues[1] - cd(2.0)), 0.0, 1e-14);
}

TEST(FrameSpectrum, NonSymmetricQFlagged) {
  FramePair fp;
  fp.q << 1, 1, -1, 1;
  const auto r = lemma2_verify(fp);
  EXPECT_FALSE(r.q_symmetric);
  EXPECT_FALSE(r.eigenvalues_match);
  EXPECT_FALSE(r.pass());
  EXPECT_NEAR(std::abs(r.eigenvalues[1] - cd(1.0, 1.0)), 0.0, 1e-14);
  // Same subalgebra as Q = I: u = (1 + i)(X + iX').
  EXPECT_LT((frame_vectors(fp).u - cd(1, 1) * frame_vectors(FramePair{}).u).norm(), 1e-15);
}

TEST(FrameSpectrum, ZeroTraceFlagged) {
  FramePair fp;
  fp.q << 1, 0.5, 0.5, -1;
  const auto r = lemma2_verify(fp);
  EXPECT_FALSE(r.trace_nonzero);
  EXPECT_FALSE(r.pass());
}

TEST(InvariantSubalgebra, IdentityFrameSpan) {
  const auto h = frame_vectors_exact(QMatrix::identity(2), QMatrix::identity(4));
  const auto h0 = cs::h_from_j(lie::non_nilpotent_real_form(), cs::standard_structure(6));
  EXPECT_TRUE(cs::same_span(h, h0.basis));
  EXPECT_TRUE(cs::is_subalgebra(lie::ComplexifiedAlgebra(lie::non_nilpotent_real_form()), cs::ComplexSubalgebra{h}));
}

// Property: random closed frames satisfy the spectrum statement and the S P = P M relation.
TEST(Property, RandomValidFrames) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 500; ++trial) {
    const auto fp = random_valid_frame(rng);
    EXPECT_LT(std::abs(fp.q(0, 1) - fp.q(1, 0)), 1e-15);
    const auto r = lemma2_verify(fp, 1e-8);
    ASSERT_TRUE(r.eigenvalues_match) << "trial " << trial;
    EXPECT_TRUE(r.pass()) << "trial " << trial;
    EXPECT_LT(r.relation_residual, 1e-8);
    // For these frames S is (tr Q / 2) diag(-I, I).
    Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
    expected.diagonal() << -1, -1, 1, 1;
    expected *= fp.q.trace() / 2.0;
    EXPECT_LT((s_operator(fp) - expected).norm(), 1e-10 * std::max(1.0, expected.norm()));
  }
}

TEST(Property, OppositeWeightFramesAreClosedButOutsideTheStatement) {
  // span(Y + iY', Z - iZ') is a subalgebra; its bracket spectrum is {-2, 0} at Q = I.
  FramePair fp;
  fp.p = Eigen::Vector4d(1, 1, 1, -1).asDiagonal();
  const auto r = lemma2_verify(fp);
  EXPECT_FALSE(r.eigenvalues_match);
  EXPECT_NEAR(std::abs(r.eigenvalues[0] - cd(-1.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(r.eigenvalues[1]), 0.0, 1e-14);
  EXPECT_LT(r.relation_residual, 1e-12);
}
