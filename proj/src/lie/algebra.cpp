#include "solvlie/lie/algebra.hpp"

#include <set>

namespace solvlie::lie {

StructureAlgebra::StructureAlgebra(std::size_t dim, const std::vector<BracketEntry>& brackets,
                                   std::vector<std::string> labels)
    : dim_(dim), table_(dim * dim, QVector(dim, Rational(0))), labels_(std::move(labels)) {
  if (dim == 0) throw DimensionError("algebra dimension must be positive");
  if (labels_.empty())
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
  if (labels_.size() != dim) throw DimensionError("label count must equal algebra dimension");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != dim)
    throw DimensionError("basis labels must be pairwise distinct");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& b : brackets) {
    if (b.i >= dim || b.j >= dim) throw DimensionError("bracket index out of range");
    if (b.value.size() != dim) throw DimensionError("bracket value length must equal algebra dimension");
    if (b.i == b.j) {
      for (const auto& x : b.value)
        if (!x.is_zero()) throw DimensionError("[e_i, e_i] must vanish");
      continue;
    }
    const auto key = std::minmax(b.i, b.j);
    if (!seen.insert(key).second) throw DimensionError("bracket pair given twice");
    QVector neg(dim);
    for (std::size_t k = 0; k < dim; ++k) neg[k] = -b.value[k];
    table_[b.i * dim + b.j] = b.value;
    table_[b.j * dim + b.i] = std::move(neg);
  }
}

std::size_t StructureAlgebra::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw DimensionError("unknown basis label '" + std::string(label) + "'");
}

std::vector<BracketEntry> StructureAlgebra::nonzero_brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const QVector& v = structure(i, j);
      if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); })) out.push_back({i, j, v});
    }
  return out;
}

QVector StructureAlgebra::basis_vector(std::size_t i) const {
  if (i >= dim_) throw DimensionError("basis index out of range");
  QVector e(dim_, Rational(0));
  e[i] = 1;
  return e;
}

Eigen::VectorXd bracket(const StructureAlgebra& g, const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  const auto r = bracket(g, std::span<const double>(u.data(), static_cast<std::size_t>(u.size())),
                         std::span<const double>(v.data(), static_cast<std::size_t>(v.size())));
  return Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size()));
}

Eigen::VectorXcd bracket(const StructureAlgebra& g, const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  using cd = std::complex<double>;
  const auto r = bracket(g, std::span<const cd>(u.data(), static_cast<std::size_t>(u.size())),
                         std::span<const cd>(v.data(), static_cast<std::size_t>(v.size())));
  return Eigen::Map<const Eigen::VectorXcd>(r.data(), static_cast<Eigen::Index>(r.size()));
}

bool jacobi_check(const StructureAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const QVector ei = g.basis_vector(i), ej = g.basis_vector(j), ek = g.basis_vector(k);
        QVector sum = bracket(g, bracket(g, ei, ej), ek);
        const QVector b = bracket(g, bracket(g, ej, ek), ei);
        const QVector c = bracket(g, bracket(g, ek, ei), ej);
        for (std::size_t t = 0; t < n; ++t)
          if (!(sum[t] + b[t] + c[t]).is_zero()) return false;
      }
  return true;
}

bool is_unimodular(const StructureAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!ad_matrix(g, g.basis_vector(i)).trace().is_zero()) return false;
  return true;
}

QMatrix ad_matrix(const StructureAlgebra& g, const QVector& u) {
  if (u.size() != g.dim()) throw DimensionError("ad_matrix: vector length must equal algebra dimension");
  QMatrix m(g.dim(), g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) m.set_col(j, bracket(g, u, g.basis_vector(j)));
  return m;
}

Eigen::MatrixXd ad_matrix(const StructureAlgebra& g, const Eigen::VectorXd& u) {
  const auto n = static_cast<Eigen::Index>(g.dim());
  if (u.size() != n) throw DimensionError("ad_matrix: vector length must equal algebra dimension");
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m.col(j) = bracket(g, u, Eigen::VectorXd(Eigen::VectorXd::Unit(n, j)));
  return m;
}

std::vector<QVector> bracket_span(const StructureAlgebra& g, const std::vector<QVector>& a,
                                  const std::vector<QVector>& b) {
  std::vector<QVector> products;
  for (const auto& x : a)
    for (const auto& y : b) products.push_back(bracket(g, x, y));
  if (products.empty()) return {};
  return row_space_basis(products, g.dim());
}

std::vector<QVector> derived_algebra(const StructureAlgebra& g) {
  std::vector<QVector> basis;
  for (std::size_t i = 0; i < g.dim(); ++i) basis.push_back(g.basis_vector(i));
  return bracket_span(g, basis, basis);
}

SeriesDims derived_and_central_series(const StructureAlgebra& g) {
  std::vector<QVector> whole;
  for (std::size_t i = 0; i < g.dim(); ++i) whole.push_back(g.basis_vector(i));

  SeriesDims out;
  auto run = [&](std::vector<std::size_t>& dims, bool derived) {
    std::vector<QVector> current = whole;
    dims.push_back(current.size());
    while (!current.empty()) {
      std::vector<QVector> next = derived ? bracket_span(g, current, current) : bracket_span(g, whole, current);
      if (next.size() == current.size()) break;
      dims.push_back(next.size());
      current = std::move(next);
    }
  };
  run(out.derived, true);
  run(out.lower_central, false);
  return out;
}

}  // namespace solvlie::lie
