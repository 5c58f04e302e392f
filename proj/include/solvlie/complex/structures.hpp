#pragma once

#include "solvlie/lie/algebra.hpp"

#include <Eigen/Dense>

#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace solvlie::cs {

/// Linear map J of a real vector space of even dimension with J^2 = -I (checked exactly).
class AlmostComplexStructure {
 public:
  explicit AlmostComplexStructure(QMatrix j);

  const QMatrix& matrix() const { return j_; }
  std::size_t dim() const { return j_.rows(); }
  QVector apply(const QVector& v) const { return j_ * v; }

  friend bool operator==(const AlmostComplexStructure&, const AlmostComplexStructure&) = default;

 private:
  QMatrix j_;
};

/// The structure given by multiplication by i on each coordinate plane:
/// e_{2k} -> e_{2k+1}, e_{2k+1} -> -e_{2k}. On a realified complex algebra this is
/// the complex structure of the complex Lie group.
AlmostComplexStructure standard_structure(std::size_t dim);

/// M J M^-1. Throws SingularityError if M is singular.
AlmostComplexStructure conjugate_structure(const AlmostComplexStructure& j, const QMatrix& m);

/// M J_std M^-1 for a random invertible integer M with entries in [-max_entry, max_entry].
AlmostComplexStructure random_structure(std::mt19937_64& rng, std::size_t dim, int max_entry = 2);

/// C-basis of a complex subspace of the complexified algebra.
struct ComplexSubalgebra {
  std::vector<CQVector> basis;
};

/// N_J(u, v) = [Ju, Jv] - J[Ju, v] - J[u, Jv] - [u, v], exact.
QVector nijenhuis(const lie::StructureAlgebra& g, const AlmostComplexStructure& j, const QVector& u,
                  const QVector& v);

/// N_J vanishes on all basis pairs.
bool is_integrable(const lie::StructureAlgebra& g, const AlmostComplexStructure& j);

/// First basis pair (i < j) on which N_J is nonzero, if any.
std::optional<std::pair<std::size_t, std::size_t>> nijenhuis_witness(const lie::StructureAlgebra& g,
                                                                     const AlmostComplexStructure& j);

/// h_J = span_C { u + i J u }, reduced to dim/2 independent vectors taken from the
/// images of the standard basis.
ComplexSubalgebra h_from_j(const lie::StructureAlgebra& g, const AlmostComplexStructure& j);

/// The unique J with W = { u + i J u }: J acts as -i on W and +i on conj(W).
/// Throws DimensionError for a wrong vector count and DecompositionError when
/// W and conj(W) do not span the complexification.
AlmostComplexStructure j_from_subspace(const ComplexSubalgebra& w, std::size_t dim);

/// Exact test that [w_a, w_b] lies in span(W) for all basis pairs.
bool is_subalgebra(const lie::ComplexifiedAlgebra& gc, const ComplexSubalgebra& w);

/// Floating-point variant; rank decisions use singular values above tol * max-entry.
bool is_subalgebra(const lie::ComplexifiedAlgebra& gc, const std::vector<Eigen::VectorXcd>& w, double tol);

/// Exact equality of the complex spans of two vector families.
bool same_span(const std::vector<CQVector>& a, const std::vector<CQVector>& b);

/// Numeric rank with threshold tol * max|entry|.
std::size_t numeric_rank(const Eigen::MatrixXcd& m, double tol);

}  // namespace solvlie::cs
