#include "solvlie/pk/pseudokahler.hpp"

#include "solvlie/errors.hpp"
#include "solvlie/kernel/numeric.hpp"

#include <cmath>

namespace solvlie::pk {

namespace {

using cd = std::complex<double>;

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

ConstantTwoForm::ConstantTwoForm(QMatrix s) : s_(std::move(s)) {
  if (!s_.is_square()) throw DimensionError("ConstantTwoForm: matrix must be square");
  if (!(s_.transpose() == -s_)) throw DimensionError("ConstantTwoForm: matrix must be skew");
}

Rational ConstantTwoForm::operator()(const QVector& u, const QVector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw DimensionError("ConstantTwoForm: vector length mismatch");
  return dot(u, s_ * v);
}

ConstantTwoForm omega_standard() {
  const GaussianRational one(1), i = GaussianRational::i(), zero(0);
  // Complex coordinate differentials in the real basis: dz_k = d(Re z_k) + i d(Im z_k).
  const auto d = [&](std::size_t k, bool conj) {
    CQVector v(6, zero);
    v[2 * k] = one;
    v[2 * k + 1] = conj ? -i : i;
    return v;
  };
  const CQMatrix w = i * wedge(d(0, false), d(0, true)) + wedge(d(1, false), d(2, true)) +
                     wedge(d(1, true), d(2, false));
  QMatrix s(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) {
      if (!w(r, c).im.is_zero()) throw Error("omega_standard: form is not real");
      s(r, c) = w(r, c).re;
    }
  return ConstantTwoForm(std::move(s));
}

bool compatibility_check(const ConstantTwoForm& s, const cs::AlmostComplexStructure& j) {
  if (s.dim() != j.dim()) throw DimensionError("compatibility_check: dimension mismatch");
  const QMatrix& jm = j.matrix();
  return jm.transpose() * s.matrix() * jm == s.matrix();
}

bool compatibility_check(const Eigen::MatrixXd& s, const Eigen::MatrixXd& j, double tol) {
  if (s.rows() != j.rows() || s.cols() != j.cols() || s.rows() != s.cols())
    throw DimensionError("compatibility_check: dimension mismatch");
  return (j.transpose() * s * j - s).norm() <= tol * std::max(1.0, s.norm());
}

MetricReport metric_and_signature(const Eigen::MatrixXd& s, const Eigen::MatrixXd& j) {
  if (s.rows() != j.rows() || s.cols() != j.cols() || s.rows() != s.cols())
    throw DimensionError("metric_and_signature: dimension mismatch");
  MetricReport r;
  r.g = s * j;
  if ((r.g - r.g.transpose()).norm() > 1e-10 * std::max(1.0, r.g.norm()))
    throw CompatibilityError("metric_and_signature: omega(., J.) is not symmetric");
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(r.g).eigenvalues();
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev[k] > 1e-10)
      ++r.positive;
    else if (ev[k] < -1e-10)
      ++r.negative;
    else
      ++r.zero;
  }
  return r;
}

MetricReport metric_and_signature(const ConstantTwoForm& s, const cs::AlmostComplexStructure& j) {
  if (s.dim() != j.dim()) throw DimensionError("metric_and_signature: dimension mismatch");
  if (!((s.matrix() * j.matrix()).transpose() == s.matrix() * j.matrix()))
    throw CompatibilityError("metric_and_signature: omega(., J.) is not symmetric");
  return metric_and_signature(to_eigen(s.matrix()), to_eigen(j.matrix()));
}

cd translation_pullback_factor(cd lam) { return std::exp(cd(0.0, 2.0 * lam.imag())); }

std::vector<cd> invariance_factors(const lattice::LatticeSpec& spec) {
  std::vector<cd> out;
  if (!std::holds_alternative<lattice::LatticeSpecSolv>(spec)) return out;
  for (const cd& x : lattice::lambda_generators(spec)) out.push_back(translation_pullback_factor(x));
  return out;
}

bool pk_exists(lattice::Classification c) {
  return c == lattice::Classification::Type1 || c == lattice::Classification::Type3b;
}

QMatrix ce_differential(const lie::StructureAlgebra& g, const QVector& alpha) {
  const std::size_t n = g.dim();
  if (alpha.size() != n) throw DimensionError("ce_differential: covector length mismatch");
  QMatrix d(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = -dot(alpha, g.structure(i, j));
  return d;
}

std::vector<Rational> ce_differential2(const lie::StructureAlgebra& g, const QMatrix& omega) {
  const std::size_t n = g.dim();
  if (omega.rows() != n || omega.cols() != n) throw DimensionError("ce_differential2: form size mismatch");
  // omega([e_a, e_b], e_c) = sum_k c_ab^k omega(k, c)
  const auto w = [&](std::size_t a, std::size_t b, std::size_t c) {
    const QVector& s = g.structure(a, b);
    Rational v = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (!s[k].is_zero()) v += s[k] * omega(k, c);
    return v;
  };
  std::vector<Rational> out(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[(i * n + j) * n + k] = -w(i, j, k) + w(i, k, j) - w(j, k, i);
  return out;
}

std::vector<QMatrix> coframe_differentials(const lie::StructureAlgebra& g) {
  std::vector<QMatrix> out;
  for (std::size_t k = 0; k < g.dim(); ++k) out.push_back(ce_differential(g, g.basis_vector(k)));
  return out;
}

}  // namespace solvlie::pk
