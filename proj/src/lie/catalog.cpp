#include "solvlie/lie/catalog.hpp"

namespace solvlie::lie {

namespace {

QVector unit(std::size_t dim, std::size_t k, long long coeff = 1) {
  QVector v(dim, Rational(0));
  v[k] = coeff;
  return v;
}

CatalogEntry make_entry(AlgebraKind kind) {
  const std::vector<std::string> labels{"X", "Y", "Z"};
  std::vector<BracketEntry> brackets;
  std::vector<std::size_t> nilradical;
  switch (kind) {
    case AlgebraKind::Abelian:
      nilradical = {0, 1, 2, 3, 4, 5};
      break;
    case AlgebraKind::Nilpotent:
      brackets = {{0, 1, unit(3, 2)}};  // [X, Y] = Z
      nilradical = {0, 1, 2, 3, 4, 5};
      break;
    case AlgebraKind::NonNilpotent:
      brackets = {{0, 1, unit(3, 1, -1)}, {0, 2, unit(3, 2)}};  // [X, Y] = -Y, [X, Z] = Z
      nilradical = {2, 3, 4, 5};
      break;
  }
  StructureAlgebra complex_algebra(3, brackets, labels);
  StructureAlgebra real_form =
      kind == AlgebraKind::NonNilpotent ? non_nilpotent_real_form() : realify(complex_algebra);
  return {kind, std::move(complex_algebra), std::move(real_form), std::move(nilradical)};
}

}  // namespace

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Abelian: return "abelian";
    case AlgebraKind::Nilpotent: return "nilpotent";
    case AlgebraKind::NonNilpotent: return "non-nilpotent";
  }
  return "?";
}

AlgebraKind parse_algebra_kind(std::string_view name) {
  if (name == "abelian" || name == "1") return AlgebraKind::Abelian;
  if (name == "nilpotent" || name == "2") return AlgebraKind::Nilpotent;
  if (name == "non-nilpotent" || name == "nonnilpotent" || name == "3") return AlgebraKind::NonNilpotent;
  throw ParseError("unknown algebra kind '" + std::string(name) + "'");
}

StructureAlgebra realify(const StructureAlgebra& c) {
  const std::size_t n = c.dim(), m = 2 * n;
  std::vector<std::string> labels;
  for (const auto& l : c.labels()) {
    labels.push_back(l);
    labels.push_back(l + "'");
  }
  std::vector<BracketEntry> brackets;
  for (const auto& b : c.nonzero_brackets()) {
    QVector re(m, Rational(0)), im(m, Rational(0)), neg(m, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
      re[2 * k] = b.value[k];
      im[2 * k + 1] = b.value[k];
      neg[2 * k] = -b.value[k];
    }
    // [e_i, e_j] = c, [e_i, i e_j] = [i e_i, e_j] = i c, [i e_i, i e_j] = -c
    brackets.push_back({2 * b.i, 2 * b.j, re});
    brackets.push_back({2 * b.i, 2 * b.j + 1, im});
    brackets.push_back({2 * b.i + 1, 2 * b.j, im});
    brackets.push_back({2 * b.i + 1, 2 * b.j + 1, neg});
  }
  return StructureAlgebra(m, brackets, labels);
}

StructureAlgebra non_nilpotent_real_form() {
  enum : std::size_t { X, Xp, Y, Yp, Z, Zp };
  const std::vector<BracketEntry> brackets{
      {X, Y, unit(6, Y, -1)},   {X, Yp, unit(6, Yp, -1)}, {X, Z, unit(6, Z)},    {X, Zp, unit(6, Zp)},
      {Xp, Y, unit(6, Yp, -1)}, {Xp, Yp, unit(6, Y)},     {Xp, Z, unit(6, Zp)}, {Xp, Zp, unit(6, Z, -1)},
  };
  return StructureAlgebra(6, brackets, {"X", "X'", "Y", "Y'", "Z", "Z'"});
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      make_entry(AlgebraKind::Abelian), make_entry(AlgebraKind::Nilpotent), make_entry(AlgebraKind::NonNilpotent)};
  return entries;
}

const CatalogEntry& catalog_entry(AlgebraKind kind) { return catalog()[static_cast<std::size_t>(kind)]; }

bool nilradical_consistent(const CatalogEntry& entry) {
  const StructureAlgebra& g = entry.real_form;
  std::vector<QVector> n, whole;
  for (std::size_t i : entry.nilradical_indices) n.push_back(g.basis_vector(i));
  for (std::size_t i = 0; i < g.dim(); ++i) whole.push_back(g.basis_vector(i));
  if (n.empty()) return false;
  const std::size_t n_dim = n.size();

  // ideal: [g, n] stays inside n
  for (const auto& v : bracket_span(g, whole, n)) {
    auto span = n;
    span.push_back(v);
    if (row_space_basis(span, g.dim()).size() != n_dim) return false;
  }
  // nilpotent: n, [n, n], [n, [n, n]], ... reaches 0
  std::vector<QVector> current = n;
  for (std::size_t step = 0; step <= n_dim && !current.empty(); ++step) current = bracket_span(g, n, current);
  return current.empty();
}

}  // namespace solvlie::lie
