#include "solvlie/errors.hpp"
#include "solvlie/kernel/polynomial.hpp"
#include "solvlie/lattice/examples.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace solvlie;
using namespace solvlie::lattice;

namespace {

cd random_cd(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return {d(rng), d(rng)};
}

GroupElement random_element(std::mt19937_64& rng) {
  return {random_cd(rng, 1.5), random_cd(rng, 3.0), random_cd(rng, 3.0)};
}

double distance(const GroupElement& a, const GroupElement& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) + std::abs(a.z - b.z);
}

double size(const GroupElement& a) { return std::abs(a.x) + std::abs(a.y) + std::abs(a.z); }

}  // namespace

TEST(GroupLaw, NilpotentProduct) {
  const GroupElement a{1.0, 2.0, 3.0}, b{cd(0, 1), 5.0, 7.0};
  const auto p = group_mul(GroupKind::Nilpotent, a, b);
  EXPECT_EQ(p.x, cd(1, 1));
  EXPECT_EQ(p.y, cd(7.0));
  EXPECT_EQ(p.z, cd(15.0));  // 3 + 7 + 1 * 5
}

TEST(GroupLaw, NonNilpotentProduct) {
  const GroupElement a{std::log(2.0), 1.0, 1.0}, b{0.0, 3.0, 4.0};
  const auto p = group_mul(GroupKind::NonNilpotent, a, b);
  EXPECT_NEAR(std::abs(p.y - cd(7.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(p.z - cd(3.0)), 0.0, 1e-14);
}

// Property: associativity and inverses on 100 random triples per group.
TEST(Property, GroupAssociativityAndInverse) {
  std::mt19937_64 rng(41);
  for (const auto kind : {GroupKind::Nilpotent, GroupKind::NonNilpotent})
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
      const auto left = group_mul(kind, group_mul(kind, a, b), c);
      const auto right = group_mul(kind, a, group_mul(kind, b, c));
      EXPECT_LT(distance(left, right), 1e-10 * std::max(1.0, size(left)));
      EXPECT_LT(size(group_mul(kind, a, group_inverse(kind, a))), 1e-10 * std::max(1.0, size(a)));
    }
}

TEST(Property, MatrixFormIsHomomorphism) {
  std::mt19937_64 rng(42);
  for (const auto kind : {GroupKind::Nilpotent, GroupKind::NonNilpotent})
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = random_element(rng), b = random_element(rng);
      const Eigen::MatrixXcd lhs = matrix_form(kind, group_mul(kind, a, b));
      const Eigen::MatrixXcd rhs = matrix_form(kind, a) * matrix_form(kind, b);
      EXPECT_LT((lhs - rhs).norm(), 1e-10 * std::max(1.0, lhs.norm()));
      EXPECT_LT(distance(from_matrix_form(kind, matrix_form(kind, a)), a), 1e-12 * std::max(1.0, size(a)));
    }
  EXPECT_THROW(from_matrix_form(GroupKind::Nilpotent, Eigen::MatrixXcd::Identity(4, 4)), DimensionError);
}

TEST(Iwasawa, GaussianIntegerPath) {
  const auto r = verify_lattice_nil(iwasawa_spec());
  EXPECT_EQ(r.path, "gaussian_integer");
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.checks.get("gaussian_closure"));
  EXPECT_TRUE(gaussian_integer_closure(500, 7));
  EXPECT_EQ(classify(iwasawa_spec()), Classification::Type2);
}

TEST(Iwasawa, NonGaussianLambdaRejected) {
  auto s = iwasawa_spec();
  s.lambda = cd(0.5, 1.0);
  EXPECT_FALSE(verify_lattice_nil(s).valid());
  EXPECT_THROW(classify(s), ClassificationError);
}

TEST(NilLattice, GenericPath) {
  // A with eigenvalues e^{+-i pi/3}.
  const auto s = nil_spec(IntMatrix{{0, -1}, {1, 1}}, {cd(0.3), cd(0, 0.7)});
  const auto r = verify_lattice_nil(s);
  EXPECT_EQ(r.path, "generic");
  EXPECT_TRUE(r.valid());
  EXPECT_NEAR(std::abs(s.lambda - std::exp(cd(0, std::numbers::pi / 3))), 0.0, 1e-9);
  EXPECT_THROW(nil_spec(IntMatrix{{2, 1}, {1, 1}}), ClassificationError);
}

TEST(NilLattice, WrongEigenvectorRejected) {
  auto s = nil_spec(IntMatrix{{0, -1}, {1, 1}});
  s.alpha[1] *= cd(1.1);
  const auto r = verify_lattice_nil(s);
  EXPECT_FALSE(r.checks.get("eigen_ok"));
  EXPECT_FALSE(r.valid());
}

TEST(SolvLattice, Example2AllChecks) {
  const auto s = example2_spec();
  const auto r = verify_lattice_solv(s, 1e-8);
  for (const auto& [name, ok] : r.checks.items()) EXPECT_TRUE(ok) << name;
  EXPECT_EQ(r.subtype, Classification::Type3a);
  EXPECT_GT(std::abs(r.generator_determinant), 1e-3);
  EXPECT_GT(std::abs(s.gamma.imag()), 1e-3);
  EXPECT_EQ(classify(s), Classification::Type3a);
  EXPECT_EQ(char_poly(s.a), (IntPolynomial{1, -1, 3, -1, 1}));
}

TEST(SolvLattice, Example3AllChecks) {
  const auto s = example3_spec();
  const auto r = verify_lattice_solv(s, 1e-8);
  for (const auto& [name, ok] : r.checks.items()) EXPECT_TRUE(ok) << name;
  EXPECT_EQ(r.subtype, Classification::Type3b);
  EXPECT_NEAR(s.gamma.real(), (3.0 + std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_NEAR(r.mu.imag(), 2.0 * std::numbers::pi, 1e-12);
  EXPECT_EQ(classify(s), Classification::Type3b);
}

TEST(SolvLattice, BrokenSpecsRejected) {
  auto s = example2_spec();
  s.gamma *= 1.01;
  EXPECT_FALSE(verify_lattice_solv(s).checks.get("eigen_relations_ok"));
  EXPECT_THROW(classify(s), ClassificationError);

  auto t = example3_spec();
  t.a(0, 0) = 3;  // det 2
  const auto r = verify_lattice_solv(t);
  EXPECT_FALSE(r.checks.get("det_one"));

  auto u = example3_spec();
  u.beta = u.alpha;  // dependent generators
  EXPECT_FALSE(verify_lattice_solv(u).checks.get("generators_independent"));

  EXPECT_THROW(verify_lattice_solv(LatticeSpecSolv{}), DimensionError);
}

TEST(SolvLattice, OddKMuNeedsNontrivialB) {
  // delta = -1 with B = I breaks B alpha = delta^-1 alpha.
  const auto s = example3_spec(IntMatrix{{2, 1}, {1, 1}}, cd(0, 1), 1);
  EXPECT_FALSE(verify_lattice_solv(s).checks.get("eigen_relations_ok"));
}

TEST(SolvLattice, LogarithmsAndGenerators) {
  const auto s = example2_spec();
  const auto [l, m] = lattice_logarithms(s);
  EXPECT_NEAR(std::abs(l - std::log(s.gamma)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m - cd(0, 2 * std::numbers::pi)), 0.0, 1e-15);
  auto no_k = s;
  no_k.k_mu.reset();
  EXPECT_NEAR(std::abs(lattice_logarithms(no_k).second), 0.0, 1e-15);  // Log 1
  EXPECT_EQ(lambda_generators(LatticeSpec(iwasawa_spec())).size(), 2u);
  EXPECT_TRUE(lambda_generators(LatticeSpec(LatticeSpecAbelian{})).empty());
}

TEST(AbelianLattice, StandardAndDegenerate) {
  EXPECT_EQ(classify(LatticeSpecAbelian{}), Classification::Type1);
  LatticeSpecAbelian bad;
  bad.generators.assign(6, {cd(1), cd(0), cd(0)});
  EXPECT_FALSE(verify_lattice_abelian(bad).valid());
  LatticeSpecAbelian good;
  const cd i(0, 1);
  good.generators = {{{1, 0, 0}}, {{i, 0, 0}}, {{0, 1, 0}}, {{0, i, 0}}, {{0, 0, 1}}, {{0, 0, i}}};
  EXPECT_TRUE(verify_lattice_abelian(good).valid());
}

TEST(Classification, Names) {
  for (const auto c : {Classification::Type1, Classification::Type2, Classification::Type3a, Classification::Type3b})
    EXPECT_EQ(parse_classification(to_string(c)), c);
  EXPECT_THROW(parse_classification("4"), ParseError);
}

// Property: randomized specs from both templates verify and classify as expected.
TEST(Property, RandomType3Specs) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a0 = random_hyperbolic_sl2(rng);
    EXPECT_EQ(bareiss_determinant(a0), 1);
    const auto s = example3_spec(a0);
    EXPECT_EQ(classify(s, 1e-8), Classification::Type3b) << a0;
  }
  for (int trial = 0; trial < 25; ++trial) {
    const auto s = type3a_spec(random_type3a_matrix(rng));
    EXPECT_EQ(classify(s, 1e-8), Classification::Type3a) << s.a;
  }
}
