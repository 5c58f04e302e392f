#include "solvlie/errors.hpp"
#include "solvlie/lie/catalog.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace solvlie;
using namespace solvlie::lie;

namespace {

QVector unit(std::size_t n, std::size_t k, int s = 1) {
  QVector v(n, Rational(0));
  v[k] = s;
  return v;
}

QVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  QVector v(n);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

std::vector<StructureAlgebra> all_forms() {
  std::vector<StructureAlgebra> out;
  for (const auto& e : catalog()) {
    out.push_back(e.complex_algebra);
    out.push_back(e.real_form);
  }
  return out;
}

}  // namespace

TEST(Catalog, ThreeEntries) {
  ASSERT_EQ(catalog().size(), 3u);
  EXPECT_EQ(catalog_entry(AlgebraKind::Abelian).complex_algebra.nonzero_brackets().size(), 0u);
  EXPECT_EQ(catalog_entry(AlgebraKind::Nilpotent).complex_algebra.nonzero_brackets().size(), 1u);
  EXPECT_EQ(catalog_entry(AlgebraKind::NonNilpotent).complex_algebra.nonzero_brackets().size(), 2u);
}

TEST(Catalog, NilpotentBracket) {
  const auto& g = catalog_entry(AlgebraKind::Nilpotent).complex_algebra;
  EXPECT_EQ(g.structure(0, 1), unit(3, 2));
  EXPECT_EQ(g.structure(1, 0), unit(3, 2, -1));
}

TEST(Catalog, NonNilpotentBrackets) {
  const auto& g = catalog_entry(AlgebraKind::NonNilpotent).complex_algebra;
  EXPECT_EQ(g.structure(0, 1), unit(3, 1, -1));  // [X, Y] = -Y
  EXPECT_EQ(g.structure(0, 2), unit(3, 2));      // [X, Z] = Z
  EXPECT_EQ(g.structure(1, 2), QVector(3, Rational(0)));
}

TEST(Catalog, JacobiAntisymmetryUnimodular) {
  for (const auto& g : all_forms()) {
    EXPECT_TRUE(jacobi_check(g));
    EXPECT_TRUE(is_unimodular(g));
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) {
        QVector neg = g.structure(j, i);
        for (auto& x : neg) x = -x;
        EXPECT_EQ(g.structure(i, j), neg);
      }
  }
}

TEST(Catalog, NonUnimodularIsDetected) {
  // [X, Y] = Y: ad X has trace 1.
  const StructureAlgebra g(2, {{0, 1, unit(2, 1)}});
  EXPECT_TRUE(jacobi_check(g));
  EXPECT_FALSE(is_unimodular(g));
}

TEST(Catalog, JacobiFailureIsDetected) {
  // [e1, e2] = e3, [e2, e3] = e1, [e1, e3] = e1 violates Jacobi.
  const StructureAlgebra g(3, {{0, 1, unit(3, 2)}, {1, 2, unit(3, 0)}, {0, 2, unit(3, 0)}});
  EXPECT_FALSE(jacobi_check(g));
}

TEST(Catalog, RealifiedNilpotentBrackets) {
  const auto& g = catalog_entry(AlgebraKind::Nilpotent).real_form;
  ASSERT_EQ(g.dim(), 6u);
  EXPECT_EQ(g.structure(0, 2), unit(6, 4));      // [X, Y] = Z
  EXPECT_EQ(g.structure(0, 3), unit(6, 5));      // [X, Y'] = Z'
  EXPECT_EQ(g.structure(1, 2), unit(6, 5));      // [X', Y] = Z'
  EXPECT_EQ(g.structure(1, 3), unit(6, 4, -1));  // [X', Y'] = -Z
}

TEST(Catalog, NonNilpotentRealFormIsRealification) {
  EXPECT_EQ(non_nilpotent_real_form(), realify(catalog_entry(AlgebraKind::NonNilpotent).complex_algebra));
  EXPECT_EQ(non_nilpotent_real_form().labels(), (std::vector<std::string>{"X", "X'", "Y", "Y'", "Z", "Z'"}));
}

TEST(Catalog, SeriesDimensions) {
  const auto a = derived_and_central_series(catalog_entry(AlgebraKind::Abelian).complex_algebra);
  const auto n = derived_and_central_series(catalog_entry(AlgebraKind::Nilpotent).complex_algebra);
  const auto s = derived_and_central_series(catalog_entry(AlgebraKind::NonNilpotent).complex_algebra);
  EXPECT_EQ(a.derived, (std::vector<std::size_t>{3, 0}));
  EXPECT_EQ(n.derived, (std::vector<std::size_t>{3, 1, 0}));
  EXPECT_EQ(n.lower_central, (std::vector<std::size_t>{3, 1, 0}));
  EXPECT_EQ(s.derived, (std::vector<std::size_t>{3, 2, 0}));
  EXPECT_EQ(s.lower_central, (std::vector<std::size_t>{3, 2}));
  EXPECT_TRUE(a.nilpotent());
  EXPECT_TRUE(n.nilpotent());
  EXPECT_TRUE(s.solvable());
  EXPECT_FALSE(s.nilpotent());
}

TEST(Catalog, NilradicalMetadata) {
  for (const auto& e : catalog()) EXPECT_TRUE(nilradical_consistent(e));
  EXPECT_EQ(catalog_entry(AlgebraKind::NonNilpotent).nilradical_indices, (std::vector<std::size_t>{2, 3, 4, 5}));
}

TEST(Catalog, ParseKind) {
  EXPECT_EQ(parse_algebra_kind("non-nilpotent"), AlgebraKind::NonNilpotent);
  EXPECT_EQ(parse_algebra_kind("2"), AlgebraKind::Nilpotent);
  EXPECT_THROW(parse_algebra_kind("simple"), ParseError);
}

TEST(StructureAlgebra, RejectsMalformedInput) {
  EXPECT_THROW(StructureAlgebra(0, {}), DimensionError);
  EXPECT_THROW(StructureAlgebra(2, {{0, 2, unit(2, 0)}}), DimensionError);
  EXPECT_THROW(StructureAlgebra(2, {{0, 1, unit(3, 0)}}), DimensionError);
  EXPECT_THROW(StructureAlgebra(2, {{0, 0, unit(2, 0)}}), DimensionError);
  EXPECT_THROW(StructureAlgebra(2, {{0, 1, unit(2, 0)}, {1, 0, unit(2, 0)}}), DimensionError);
  EXPECT_THROW(StructureAlgebra(2, {}, {"a", "a"}), DimensionError);
  EXPECT_THROW(StructureAlgebra(2, {}).index_of("q"), DimensionError);
}

TEST(StructureAlgebra, PairGivenReversedIsNegated) {
  const StructureAlgebra g(2, {{1, 0, unit(2, 1)}});
  EXPECT_EQ(g.structure(0, 1), unit(2, 1, -1));
}

// Property: ad is a Lie algebra homomorphism, ad[u, v] = [ad u, ad v].
TEST(Property, AdIsHomomorphism) {
  std::mt19937_64 rng(21);
  for (const auto& g : all_forms())
    for (int trial = 0; trial < 25; ++trial) {
      const QVector u = random_vector(rng, g.dim()), v = random_vector(rng, g.dim());
      EXPECT_EQ(ad_matrix(g, bracket(g, u, v)), commutator(ad_matrix(g, u), ad_matrix(g, v)));
    }
}

TEST(Property, BracketBilinearAndAntisymmetric) {
  std::mt19937_64 rng(22);
  for (const auto& g : all_forms())
    for (int trial = 0; trial < 20; ++trial) {
      const QVector u = random_vector(rng, g.dim()), v = random_vector(rng, g.dim()),
                    w = random_vector(rng, g.dim());
      QVector sum(g.dim()), neg = bracket(g, v, u);
      for (std::size_t k = 0; k < g.dim(); ++k) sum[k] = u[k] + Rational(3) * w[k];
      for (auto& x : neg) x = -x;
      EXPECT_EQ(bracket(g, u, v), neg);
      const QVector lhs = bracket(g, sum, v), a = bracket(g, u, v), b = bracket(g, w, v);
      for (std::size_t k = 0; k < g.dim(); ++k) EXPECT_EQ(lhs[k], a[k] + Rational(3) * b[k]);
    }
}

TEST(Property, FloatingBracketMatchesExact) {
  std::mt19937_64 rng(23);
  const auto g = non_nilpotent_real_form();
  for (int trial = 0; trial < 20; ++trial) {
    const QVector u = random_vector(rng, 6), v = random_vector(rng, 6);
    Eigen::VectorXd ud(6), vd(6);
    for (std::size_t k = 0; k < 6; ++k) {
      ud[Eigen::Index(k)] = to_double(u[k]);
      vd[Eigen::Index(k)] = to_double(v[k]);
    }
    const QVector exact = bracket(g, u, v);
    const Eigen::VectorXd approx = bracket(g, ud, vd);
    for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(approx[Eigen::Index(k)], to_double(exact[k]), 1e-12);
  }
}
