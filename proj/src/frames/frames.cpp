#include "solvlie/frames/frames.hpp"

#include "solvlie/errors.hpp"
#include "solvlie/kernel/numeric.hpp"
#include "solvlie/lie/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace solvlie::frames {

namespace {

using cd = std::complex<double>;

const lie::StructureAlgebra& real_form() {
  static const auto g = lie::non_nilpotent_real_form();
  return g;
}

Eigen::Matrix4d block_rotation() {
  Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
  t(0, 1) = t(2, 3) = 1.0;
  t(1, 0) = t(3, 2) = -1.0;
  return t;
}

// ad of a real element on span(Y, Y', Z, Z').
Eigen::Matrix4d carrier_ad(double x, double xp) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(6);
  e[0] = x;
  e[1] = xp;
  return lie::ad_matrix(real_form(), e).block(2, 2, 4, 4);
}

Eigen::Matrix2d rotation_scaling(cd c) {
  Eigen::Matrix2d r;
  r << c.real(), c.imag(), -c.imag(), c.real();
  return r;
}

}  // namespace

FrameVectors frame_vectors(const FramePair& fp) {
  if (std::abs(fp.q.determinant()) < 1e-12 * std::max(1.0, fp.q.squaredNorm()))
    throw SingularityError("frame_vectors: Q is singular");
  if (std::abs(fp.p.determinant()) < 1e-12 * std::max(1.0, fp.p.squaredNorm() * fp.p.squaredNorm()))
    throw SingularityError("frame_vectors: P is singular");
  const cd i(0.0, 1.0);
  FrameVectors f{Eigen::VectorXcd::Zero(6), Eigen::VectorXcd::Zero(6), Eigen::VectorXcd::Zero(6)};
  f.u[0] = fp.q(0, 0) + i * fp.q(0, 1);
  f.u[1] = fp.q(1, 0) + i * fp.q(1, 1);
  f.v.segment(2, 4) = fp.p.col(0).cast<cd>() + i * fp.p.col(1).cast<cd>();
  f.w.segment(2, 4) = fp.p.col(2).cast<cd>() + i * fp.p.col(3).cast<cd>();
  return f;
}

std::vector<CQVector> frame_vectors_exact(const QMatrix& q, const QMatrix& p) {
  if (q.rows() != 2 || q.cols() != 2 || p.rows() != 4 || p.cols() != 4)
    throw DimensionError("frame_vectors_exact: expected Q 2x2 and P 4x4");
  if (!inverse(q) || !inverse(p)) throw SingularityError("frame_vectors_exact: singular frame");
  const GaussianRational i = GaussianRational::i();
  std::vector<CQVector> out(3, CQVector(6, GaussianRational(0)));
  out[0][0] = GaussianRational(q(0, 0), q(0, 1));
  out[0][1] = GaussianRational(q(1, 0), q(1, 1));
  for (std::size_t r = 0; r < 4; ++r) {
    out[1][r + 2] = GaussianRational(p(r, 0)) + i * GaussianRational(p(r, 1));
    out[2][r + 2] = GaussianRational(p(r, 2)) + i * GaussianRational(p(r, 3));
  }
  return out;
}

Eigen::Matrix2cd bracket_matrix(const FramePair& fp, double tol) {
  const auto f = frame_vectors(fp);
  Eigen::MatrixXcd basis(6, 2);
  basis << f.v, f.w;
  const auto qr = basis.colPivHouseholderQr();
  Eigen::Matrix2cd a;
  const Eigen::VectorXcd targets[2] = {lie::bracket(real_form(), f.u, f.v), lie::bracket(real_form(), f.u, f.w)};
  for (int r = 0; r < 2; ++r) {
    const Eigen::Vector2cd c = qr.solve(targets[r]);
    const double scale = std::max(1.0, targets[r].norm());
    if ((basis * c - targets[r]).norm() > tol * scale)
      throw NotSubalgebraError("bracket_matrix: [u, " + std::string(r == 0 ? "v" : "w") + "] is not in span(v, w)");
    a(r, 0) = c[0] / 2.0;
    a(r, 1) = c[1] / 2.0;
  }
  return a;
}

CQMatrix bracket_matrix_exact(const QMatrix& q, const QMatrix& p) {
  const auto h = frame_vectors_exact(q, p);
  const lie::ComplexifiedAlgebra gc(real_form());
  const CQMatrix basis = from_columns(std::vector<CQVector>{h[1], h[2]}, 6);
  CQMatrix a(2, 2);
  for (std::size_t r = 0; r < 2; ++r) {
    const CQVector target = gc.bracket(h[0], h[r + 1]);
    const auto c = solve_in_span(basis, std::span<const GaussianRational>(target));
    if (!c)
      throw NotSubalgebraError("bracket_matrix_exact: [u, " + std::string(r == 0 ? "v" : "w") +
                               "] is not in span(v, w)");
    a(r, 0) = (*c)[0] / GaussianRational(2);
    a(r, 1) = (*c)[1] / GaussianRational(2);
  }
  return a;
}

Eigen::Matrix4d s_operator(const FramePair& fp) {
  const Eigen::Matrix4d t = fp.p * block_rotation() * fp.p.inverse();
  const Eigen::Matrix4d ad_u = carrier_ad(fp.q(0, 0), fp.q(1, 0));
  const Eigen::Matrix4d ad_up = carrier_ad(fp.q(0, 1), fp.q(1, 1));
  return 0.5 * (ad_u + ad_up * t);
}

QMatrix s_operator_exact(const QMatrix& q, const QMatrix& p) {
  if (q.rows() != 2 || q.cols() != 2 || p.rows() != 4 || p.cols() != 4)
    throw DimensionError("s_operator_exact: expected Q 2x2 and P 4x4");
  const auto p_inv = inverse(p);
  if (!p_inv) throw SingularityError("s_operator_exact: P is singular");
  QMatrix rot(4, 4, Rational(0));
  rot(0, 1) = rot(2, 3) = Rational(1);
  rot(1, 0) = rot(3, 2) = Rational(-1);
  const QMatrix t = p * rot * *p_inv;
  const auto carrier = [&](const Rational& x, const Rational& xp) {
    QVector e(6, Rational(0));
    e[0] = x;
    e[1] = xp;
    const QMatrix ad = lie::ad_matrix(real_form(), e);
    QMatrix out(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) out(r, c) = ad(r + 2, c + 2);
    return out;
  };
  const QMatrix sum = carrier(q(0, 0), q(1, 0)) + carrier(q(0, 1), q(1, 1)) * t;
  return sum * Rational(1, 2);
}

Eigen::Matrix4d frame_block(const Eigen::Matrix2cd& a) {
  Eigen::Matrix4d m;
  m.block<2, 2>(0, 0) = rotation_scaling(a(0, 0));
  m.block<2, 2>(2, 0) = rotation_scaling(a(0, 1));
  m.block<2, 2>(0, 2) = rotation_scaling(a(1, 0));
  m.block<2, 2>(2, 2) = rotation_scaling(a(1, 1));
  return m;
}

double relation_residual(const FramePair& fp, const Eigen::Matrix2cd& a) {
  const Eigen::Matrix4d s = s_operator(fp);
  const double scale = fp.p.norm() * std::max(1.0, s.norm());
  return (s * fp.p - fp.p * frame_block(a)).norm() / scale;
}

bool Lemma2Report::pass() const {
  return q_symmetric && trace_nonzero && eigenvalues_match && conjugator.has_value() && relation_ok;
}

Lemma2Report lemma2_verify(const FramePair& fp, double tol) {
  Lemma2Report r;
  const double trace = fp.q.trace();
  r.q_symmetric = std::abs(fp.q(0, 1) - fp.q(1, 0)) < tol;
  r.trace_nonzero = std::abs(trace) > tol;
  r.a = bracket_matrix(fp, tol);
  r.relation_residual = relation_residual(fp, r.a);
  r.relation_ok = r.relation_residual < tol;

  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(r.a);
  r.eigenvalues = es.eigenvalues();
  if (r.eigenvalues[0].real() > r.eigenvalues[1].real()) std::swap(r.eigenvalues[0], r.eigenvalues[1]);
  const double half = trace / 2.0;
  const double scale = std::max(1.0, std::abs(half));
  const auto near = [&](cd x, double y) { return std::abs(x - y) < tol * scale; };
  r.eigenvalues_match = (near(r.eigenvalues[0], -half) && near(r.eigenvalues[1], half)) ||
                        (near(r.eigenvalues[0], half) && near(r.eigenvalues[1], -half));

  const bool real_a = r.a.imag().norm() < tol * std::max(1.0, r.a.norm());
  const bool distinct = std::abs(r.eigenvalues[0] - r.eigenvalues[1]) > tol * scale;
  const bool real_spec = std::abs(r.eigenvalues[0].imag()) < tol * scale &&
                         std::abs(r.eigenvalues[1].imag()) < tol * scale;
  if (real_a && distinct && real_spec) {
    Eigen::EigenSolver<Eigen::Matrix2d> rs(r.a.real());
    Eigen::Matrix2d k = rs.eigenvectors().real();
    if (rs.eigenvalues()[0].real() > rs.eigenvalues()[1].real()) k.col(0).swap(k.col(1));
    k.col(0).normalize();
    k.col(1).normalize();
    const Eigen::Matrix2d d = k.inverse() * r.a.real() * k;
    if (std::abs(d(0, 1)) < tol * scale && std::abs(d(1, 0)) < tol * scale) r.conjugator = k;
  }
  return r;
}

FramePair random_valid_frame(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  FramePair fp;
  for (;;) {
    const double a = entry(rng), b = entry(rng), c = entry(rng);
    fp.q << a, b, b, c;
    if (std::abs(fp.q.trace()) > 0.1 && std::abs(fp.q.determinant()) > 0.1) break;
  }
  const auto nonzero = [&] {
    for (;;) {
      const cd z(entry(rng), entry(rng));
      if (std::abs(z) > 0.2) return z;
    }
  };
  Eigen::Matrix2d k;
  do {
    k << entry(rng), entry(rng), entry(rng), entry(rng);
  } while (std::abs(k.determinant()) < 0.2);
  Eigen::Matrix4d d = Eigen::Matrix4d::Zero();
  d.block<2, 2>(0, 0) = rotation_scaling(nonzero());
  d.block<2, 2>(2, 2) = rotation_scaling(nonzero());
  Eigen::Matrix4d kron = Eigen::Matrix4d::Zero();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) kron.block<2, 2>(2 * r, 2 * c) = k(r, c) * Eigen::Matrix2d::Identity();
  fp.p = d * kron;
  return fp;
}

}  // namespace solvlie::frames
