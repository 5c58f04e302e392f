#include "solvlie/winkelmann/h1.hpp"

#include "solvlie/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace solvlie::winkelmann {

namespace {

// Carrier of [g, g] / [n, n] inside the non-nilpotent real form: indices of Y, Y', Z, Z'.
constexpr Eigen::Index kCarrier = 2;

std::vector<double> distinct_real(const Eigen::VectorXcd& eig, double tol) {
  std::vector<double> vals;
  for (Eigen::Index k = 0; k < eig.size(); ++k) vals.push_back(eig[k].real());
  std::sort(vals.begin(), vals.end());
  std::vector<double> out;
  for (double v : vals)
    if (out.empty() || std::abs(v - out.back()) > tol * std::max(1.0, std::abs(v))) out.push_back(v);
  return out;
}

bool eigenvalues_real(const Eigen::VectorXcd& eig, double tol) {
  for (Eigen::Index k = 0; k < eig.size(); ++k)
    if (std::abs(eig[k].imag()) > tol * std::max(1.0, std::abs(eig[k]))) return false;
  return true;
}

}  // namespace

int h1_lie(const lie::StructureAlgebra& g) {
  return static_cast<int>(g.dim()) - static_cast<int>(lie::derived_algebra(g).size());
}

int quotient_dim(lie::AlgebraKind kind) {
  const auto& entry = lie::catalog_entry(kind);
  const auto& g = entry.real_form;
  std::vector<QVector> n;
  for (std::size_t i : entry.nilradical_indices) n.push_back(g.basis_vector(i));
  const auto gg = lie::derived_algebra(g);
  const auto nn = lie::bracket_span(g, n, n);
  return static_cast<int>(gg.size() - nn.size()) / 2;
}

bool quotient_action_is_x_only() {
  const auto g = lie::non_nilpotent_real_form();
  for (std::size_t i = kCarrier; i < g.dim(); ++i) {
    const QMatrix ad = lie::ad_matrix(g, g.basis_vector(i));
    for (std::size_t r = kCarrier; r < g.dim(); ++r)
      for (std::size_t c = kCarrier; c < g.dim(); ++c)
        if (!is_zero(ad(r, c))) return false;
  }
  return true;
}

Eigen::Matrix4d ad_on_quotient(lattice::cd x_part) {
  static const auto g = lie::non_nilpotent_real_form();
  Eigen::VectorXd u = Eigen::VectorXd::Zero(6);
  u[0] = x_part.real();
  u[1] = x_part.imag();
  const Eigen::MatrixXd ad = lie::ad_matrix(g, u);
  if (!ad.block(0, kCarrier, kCarrier, 4).isZero(0.0))
    throw Error("ad_on_quotient: span(Y, Y', Z, Z') is not ad-invariant");
  const Eigen::Matrix4d block = ad.block(kCarrier, kCarrier, 4, 4);
  return block.exp();
}

bool real_semisimple(const Eigen::MatrixXd& m, double tol) {
  const Eigen::VectorXcd eig = m.eigenvalues();
  if (!eigenvalues_real(eig, tol)) return false;
  const auto roots = distinct_real(eig, std::sqrt(tol));
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(n, n);
  double scale = 1.0;
  for (double r : roots) {
    prod = prod * (m - r * Eigen::MatrixXd::Identity(n, n));
    scale *= m.norm() + std::abs(r);
  }
  return prod.norm() <= tol * scale;
}

bool real_semisimple_by_eigenvectors(const Eigen::MatrixXd& m, double tol) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) return false;
  if (!eigenvalues_real(es.eigenvalues(), tol)) return false;
  const Eigen::MatrixXd vecs = es.eigenvectors().real();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(vecs);
  const auto& s = svd.singularValues();
  const double smin = s[s.size() - 1];
  return smin > 0.0 && s[0] / smin < 1e8;
}

int dim_W(const LatticeSpec& spec, double tol) {
  const auto c = lattice::classify(spec, tol);
  const auto kind = static_cast<lie::AlgebraKind>(lattice::catalog_index(c));
  if (quotient_dim(kind) == 0) return 0;
  if (!quotient_action_is_x_only()) throw Error("dim_W: Y, Z parts act on the quotient");
  for (const auto& x : lattice::lambda_generators(spec)) {
    const Eigen::Matrix4d ad = ad_on_quotient(x);
    const bool primary = real_semisimple(ad);
    if (primary != real_semisimple_by_eigenvectors(ad))
      throw Error("dim_W: semisimplicity tests disagree");
    if (!primary) return 0;
  }
  return quotient_dim(kind);
}

int dim_W_shortcut(const LatticeSpec& spec, double tol) {
  const auto* s = std::get_if<lattice::LatticeSpecSolv>(&spec);
  if (s == nullptr) return 0;
  const bool real = std::abs(s->gamma.imag()) < tol && std::abs(s->delta.imag()) < tol;
  return real ? 2 : 0;
}

H1Report h1(const LatticeSpec& spec, double tol) {
  H1Report r;
  r.kind = lattice::classify(spec, tol);
  const auto kind = static_cast<lie::AlgebraKind>(lattice::catalog_index(r.kind));
  r.dim_h1_lie = h1_lie(lie::catalog_entry(kind).complex_algebra);
  r.dim_W = dim_W(spec, tol);
  r.h1 = r.dim_h1_lie + r.dim_W;
  if (r.dim_W != 0 && r.dim_W != 2) throw Error("h1: dim W outside {0, 2}");
  if (r.h1 < 1 || r.h1 > 3) throw Error("h1: value outside {1, 2, 3}");
  return r;
}

H1Report h1_for_class(Classification c) {
  H1Report r;
  r.kind = c;
  switch (c) {
    case Classification::Type1: r.dim_h1_lie = 3; break;
    case Classification::Type2: r.dim_h1_lie = 2; break;
    case Classification::Type3a: r.dim_h1_lie = 1; break;
    case Classification::Type3b: r.dim_h1_lie = 1; r.dim_W = 2; break;
  }
  r.h1 = r.dim_h1_lie + r.dim_W;
  return r;
}

}  // namespace solvlie::winkelmann
