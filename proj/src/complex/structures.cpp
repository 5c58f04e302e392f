#include "solvlie/complex/structures.hpp"

namespace solvlie::cs {

namespace {

CQMatrix rows_matrix(const std::vector<CQVector>& rows, std::size_t dim) {
  CQMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) throw DimensionError("vector length mismatch");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

CQVector conj(const CQVector& v) {
  CQVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].conj();
  return out;
}

void check_dims(const lie::StructureAlgebra& g, const AlmostComplexStructure& j) {
  if (g.dim() != j.dim()) throw DimensionError("almost complex structure does not match algebra dimension");
}

}  // namespace

AlmostComplexStructure::AlmostComplexStructure(QMatrix j) : j_(std::move(j)) {
  if (!j_.is_square() || j_.rows() == 0 || j_.rows() % 2 != 0)
    throw DimensionError("almost complex structure must be a square matrix of even size");
  if (!(j_ * j_ + QMatrix::identity(j_.rows())).is_zero()) throw DimensionError("J^2 != -I");
}

AlmostComplexStructure standard_structure(std::size_t dim) {
  if (dim % 2 != 0) throw DimensionError("standard_structure: odd dimension");
  QMatrix j(dim, dim);
  for (std::size_t k = 0; k < dim; k += 2) {
    j(k + 1, k) = 1;
    j(k, k + 1) = -1;
  }
  return AlmostComplexStructure(std::move(j));
}

AlmostComplexStructure conjugate_structure(const AlmostComplexStructure& j, const QMatrix& m) {
  if (m.rows() != j.dim() || m.cols() != j.dim()) throw DimensionError("conjugate_structure: size mismatch");
  const auto inv = inverse(m);
  if (!inv) throw SingularityError("conjugate_structure: M is singular");
  return AlmostComplexStructure(m * j.matrix() * *inv);
}

AlmostComplexStructure random_structure(std::mt19937_64& rng, std::size_t dim, int max_entry) {
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  const auto j0 = standard_structure(dim);
  for (;;) {
    QMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = entry(rng);
    if (inverse(m)) return conjugate_structure(j0, m);
  }
}

QVector nijenhuis(const lie::StructureAlgebra& g, const AlmostComplexStructure& j, const QVector& u,
                  const QVector& v) {
  check_dims(g, j);
  const QVector ju = j.apply(u), jv = j.apply(v);
  const QVector a = lie::bracket(g, ju, jv);
  const QVector b = j.apply(lie::bracket(g, ju, v));
  const QVector c = j.apply(lie::bracket(g, u, jv));
  const QVector d = lie::bracket(g, u, v);
  QVector out(g.dim());
  for (std::size_t k = 0; k < g.dim(); ++k) out[k] = a[k] - b[k] - c[k] - d[k];
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> nijenhuis_witness(const lie::StructureAlgebra& g,
                                                                     const AlmostComplexStructure& j) {
  check_dims(g, j);
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b) {
      const QVector n = nijenhuis(g, j, g.basis_vector(a), g.basis_vector(b));
      if (std::any_of(n.begin(), n.end(), [](const Rational& x) { return !x.is_zero(); })) return std::pair{a, b};
    }
  return std::nullopt;
}

bool is_integrable(const lie::StructureAlgebra& g, const AlmostComplexStructure& j) {
  return !nijenhuis_witness(g, j).has_value();
}

ComplexSubalgebra h_from_j(const lie::StructureAlgebra& g, const AlmostComplexStructure& j) {
  check_dims(g, j);
  const std::size_t n = g.dim();
  ComplexSubalgebra h;
  std::vector<CQVector> chosen;
  for (std::size_t k = 0; k < n && h.basis.size() < n / 2; ++k) {
    const QVector e = g.basis_vector(k);
    const QVector je = j.apply(e);
    CQVector w(n);
    for (std::size_t t = 0; t < n; ++t) w[t] = GaussianRational(e[t], je[t]);
    chosen.push_back(w);
    if (field_rank(rows_matrix(chosen, n)) == chosen.size())
      h.basis.push_back(std::move(w));
    else
      chosen.pop_back();
  }
  return h;
}

AlmostComplexStructure j_from_subspace(const ComplexSubalgebra& w, std::size_t dim) {
  if (dim == 0 || dim % 2 != 0) throw DimensionError("j_from_subspace: dimension must be even and positive");
  const std::size_t m = dim / 2;
  if (w.basis.size() != m) throw DimensionError("j_from_subspace: need exactly dim/2 vectors");
  for (const auto& v : w.basis)
    if (v.size() != dim) throw DimensionError("j_from_subspace: vector length mismatch");

  // B = [W | conj W] as columns; J = B diag(-i, ..., +i, ...) B^{-1}.
  CQMatrix b(dim, dim);
  for (std::size_t k = 0; k < m; ++k) {
    b.set_col(k, w.basis[k]);
    b.set_col(m + k, conj(w.basis[k]));
  }
  const auto b_inv = inverse(b);
  if (!b_inv) throw DecompositionError("W and conj(W) do not form a direct sum decomposition");
  CQMatrix d(dim, dim);
  for (std::size_t k = 0; k < m; ++k) {
    d(k, k) = GaussianRational(0, -1);
    d(m + k, m + k) = GaussianRational(0, 1);
  }
  const CQMatrix jc = b * d * (*b_inv);
  QMatrix j(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      if (!jc(r, c).im.is_zero()) throw Error("j_from_subspace: result is not real (internal)");
      j(r, c) = jc(r, c).re;
    }
  return AlmostComplexStructure(std::move(j));
}

bool is_subalgebra(const lie::ComplexifiedAlgebra& gc, const ComplexSubalgebra& w) {
  const std::size_t n = gc.dim();
  if (w.basis.empty()) return true;
  const std::size_t base_rank = field_rank(rows_matrix(w.basis, n));
  for (std::size_t a = 0; a < w.basis.size(); ++a)
    for (std::size_t b = a + 1; b < w.basis.size(); ++b) {
      auto rows = w.basis;
      rows.push_back(gc.bracket(w.basis[a], w.basis[b]));
      if (field_rank(rows_matrix(rows, n)) != base_rank) return false;
    }
  return true;
}

std::size_t numeric_rank(const Eigen::MatrixXcd& m, double tol) {
  if (m.size() == 0) return 0;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s[k] > tol * scale) ++r;
  return r;
}

bool is_subalgebra(const lie::ComplexifiedAlgebra& gc, const std::vector<Eigen::VectorXcd>& w, double tol) {
  const auto n = static_cast<Eigen::Index>(gc.dim());
  if (w.empty()) return true;
  auto as_matrix = [&](const std::vector<Eigen::VectorXcd>& cols) {
    Eigen::MatrixXcd m(n, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k].size() != n) throw DimensionError("vector length mismatch");
      m.col(static_cast<Eigen::Index>(k)) = cols[k];
    }
    return m;
  };
  const std::size_t base_rank = numeric_rank(as_matrix(w), tol);
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      auto cols = w;
      cols.push_back(gc.bracket(w[a], w[b]));
      if (numeric_rank(as_matrix(cols), tol) != base_rank) return false;
    }
  return true;
}

bool same_span(const std::vector<CQVector>& a, const std::vector<CQVector>& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  const std::size_t n = a.front().size();
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = field_rank(rows_matrix(a, n));
  return ra == field_rank(rows_matrix(b, n)) && ra == field_rank(rows_matrix(both, n));
}

}  // namespace solvlie::cs
