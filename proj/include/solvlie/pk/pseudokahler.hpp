#pragma once

#include "solvlie/complex/structures.hpp"
#include "solvlie/lattice/spec.hpp"
#include "solvlie/lie/algebra.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace solvlie::pk {

/// Real 2-form with constant coefficients on a real coordinate space:
/// omega(u, v) = u^T S v with S skew.
class ConstantTwoForm {
 public:
  explicit ConstantTwoForm(QMatrix s);
  const QMatrix& matrix() const { return s_; }
  std::size_t dim() const { return s_.rows(); }
  Rational operator()(const QVector& u, const QVector& v) const;

 private:
  QMatrix s_;
};

/// a ^ b as a skew matrix: (a ^ b)(e_i, e_j) = a_i b_j - a_j b_i.
template <class T>
Matrix<T> wedge(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DimensionError("wedge: length mismatch");
  Matrix<T> m(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a[i] * b[j] - a[j] * b[i];
  return m;
}

/// i dx ^ dx-bar + dy ^ dz-bar + dy-bar ^ dz on C^3 in coordinates
/// (Re x, Im x, Re y, Im y, Re z, Im z). Built from complex 1-forms; throws if the
/// result is not real.
ConstantTwoForm omega_standard();

/// J^T S J == S, exactly.
bool compatibility_check(const ConstantTwoForm& s, const cs::AlmostComplexStructure& j);
/// J^T S J == S within tol, for floating-point data.
bool compatibility_check(const Eigen::MatrixXd& s, const Eigen::MatrixXd& j, double tol);

struct MetricReport {
  Eigen::MatrixXd g;  // g(u, v) = omega(u, J v), i.e. S J
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool nondegenerate() const { return zero == 0; }
  bool definite() const { return nondegenerate() && (positive == 0 || negative == 0); }
};

/// Throws CompatibilityError if S J is not symmetric. Eigenvalue threshold 1e-10.
MetricReport metric_and_signature(const ConstantTwoForm& s, const cs::AlmostComplexStructure& j);
MetricReport metric_and_signature(const Eigen::MatrixXd& s, const Eigen::MatrixXd& j);

/// Factor e^{2 i Im(lam)} picked up by the dy ^ dz-bar term under left translation by an
/// element with x-part lam (dy -> e^lam dy, dz -> e^-lam dz).
std::complex<double> translation_pullback_factor(std::complex<double> lam);

/// Pullback factors for the Lambda generators of a non-nilpotent spec; empty otherwise.
std::vector<std::complex<double>> invariance_factors(const lattice::LatticeSpec& spec);

/// True for Type1 and Type3b.
bool pk_exists(lattice::Classification c);

/// d alpha(e_i, e_j) = -alpha([e_i, e_j]) for an invariant 1-form alpha.
QMatrix ce_differential(const lie::StructureAlgebra& g, const QVector& alpha);

/// d omega(a, b, c) = -omega([a, b], c) + omega([a, c], b) - omega([b, c], a) for an invariant
/// 2-form given by its skew matrix; result indexed as out[(i * n + j) * n + k].
std::vector<Rational> ce_differential2(const lie::StructureAlgebra& g, const QMatrix& omega);

/// d omega_k for the dual coframe omega_1..omega_n of the basis.
std::vector<QMatrix> coframe_differentials(const lie::StructureAlgebra& g);

}  // namespace solvlie::pk
