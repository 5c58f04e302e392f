#pragma once

#include "solvlie/kernel/matrix.hpp"

#include <Eigen/Dense>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace solvlie::lie {

/// One structure-constant entry: [e_i, e_j] = value (coordinates in the basis).
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  QVector value;
};

/// Finite-dimensional Lie algebra given by exact rational structure constants.
///
/// Brackets are supplied for pairs i < j; a pair given as j > i is stored negated,
/// omitted pairs are zero. The Jacobi identity is not enforced on construction
/// (use jacobi_check) so malformed inputs can still be inspected.
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  StructureAlgebra(std::size_t dim, const std::vector<BracketEntry>& brackets, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(std::string_view label) const;

  /// [e_i, e_j] in basis coordinates, for any i, j.
  const QVector& structure(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  /// Nonzero brackets with i < j, in lexicographic order.
  std::vector<BracketEntry> nonzero_brackets() const;

  QVector basis_vector(std::size_t i) const;

  friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<QVector> table_;  // dim*dim, antisymmetric
  std::vector<std::string> labels_;
};

/// Bilinear extension of the structure constants to coefficient type T
/// (Rational, GaussianRational, double, std::complex<double>).
template <class T>
std::vector<T> bracket(const StructureAlgebra& g, std::span<const T> u, std::span<const T> v) {
  const std::size_t n = g.dim();
  if (u.size() != n || v.size() != n) throw DimensionError("bracket: vector length must equal algebra dimension");
  std::vector<T> out(n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero_scalar(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || is_zero_scalar(v[j])) continue;
      const QVector& c = g.structure(i, j);
      const T coef = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero()) out[k] += coef * lift<T>(c[k]);
    }
  }
  return out;
}

template <class T>
std::vector<T> bracket(const StructureAlgebra& g, const std::vector<T>& u, const std::vector<T>& v) {
  return bracket(g, std::span<const T>(u), std::span<const T>(v));
}

Eigen::VectorXd bracket(const StructureAlgebra& g, const Eigen::VectorXd& u, const Eigen::VectorXd& v);
Eigen::VectorXcd bracket(const StructureAlgebra& g, const Eigen::VectorXcd& u, const Eigen::VectorXcd& v);

/// Exact check of the Jacobi identity over all basis triples.
bool jacobi_check(const StructureAlgebra& g);

/// trace(ad e_i) = 0 for every basis vector.
bool is_unimodular(const StructureAlgebra& g);

/// Matrix of ad(u) in the basis: column j holds [u, e_j].
QMatrix ad_matrix(const StructureAlgebra& g, const QVector& u);
Eigen::MatrixXd ad_matrix(const StructureAlgebra& g, const Eigen::VectorXd& u);

struct SeriesDims {
  std::vector<std::size_t> derived;        // dim g, dim g', dim g'', ... until 0 or stable
  std::vector<std::size_t> lower_central;  // dim g, dim g^2, dim g^3, ... until 0 or stable
  bool solvable() const { return derived.back() == 0; }
  bool nilpotent() const { return lower_central.back() == 0; }
};

/// Derived and lower central series dimensions. A series stops when it reaches 0
/// or when a step leaves the dimension unchanged (the repeated value is not appended).
SeriesDims derived_and_central_series(const StructureAlgebra& g);

/// Basis (rows, reduced) of span{[a, b] : a in A, b in B}.
std::vector<QVector> bracket_span(const StructureAlgebra& g, const std::vector<QVector>& a, const std::vector<QVector>& b);

/// Basis (rows, reduced) of [g, g].
std::vector<QVector> derived_algebra(const StructureAlgebra& g);

/// g (x) C: same structure constants, complex coefficient vectors.
class ComplexifiedAlgebra {
 public:
  explicit ComplexifiedAlgebra(StructureAlgebra base) : base_(std::move(base)) {}
  const StructureAlgebra& base() const { return base_; }
  std::size_t dim() const { return base_.dim(); }

  CQVector bracket(const CQVector& u, const CQVector& v) const { return lie::bracket(base_, u, v); }
  Eigen::VectorXcd bracket(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) const {
    return lie::bracket(base_, u, v);
  }

 private:
  StructureAlgebra base_;
};

}  // namespace solvlie::lie
