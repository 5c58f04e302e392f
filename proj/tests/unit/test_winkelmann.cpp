#include "solvlie/lattice/examples.hpp"
#include "solvlie/winkelmann/h1.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace solvlie;
using namespace solvlie::winkelmann;
using lattice::cd;

namespace {

Eigen::Matrix4d int_power(const Eigen::Matrix4d& m, int k) {
  Eigen::Matrix4d base = k < 0 ? Eigen::Matrix4d(m.inverse()) : m, out = Eigen::Matrix4d::Identity();
  for (int n = std::abs(k); n > 0; --n) out = out * base;
  return out;
}

}  // namespace

TEST(H1Lie, CatalogValues) {
  EXPECT_EQ(h1_lie(lie::catalog_entry(lie::AlgebraKind::Abelian).complex_algebra), 3);
  EXPECT_EQ(h1_lie(lie::catalog_entry(lie::AlgebraKind::Nilpotent).complex_algebra), 2);
  EXPECT_EQ(h1_lie(lie::catalog_entry(lie::AlgebraKind::NonNilpotent).complex_algebra), 1);
  // Real forms double everything.
  EXPECT_EQ(h1_lie(lie::non_nilpotent_real_form()), 2);
}

TEST(Quotient, Dimensions) {
  EXPECT_EQ(quotient_dim(lie::AlgebraKind::Abelian), 0);
  EXPECT_EQ(quotient_dim(lie::AlgebraKind::Nilpotent), 0);
  EXPECT_EQ(quotient_dim(lie::AlgebraKind::NonNilpotent), 2);
  EXPECT_TRUE(quotient_action_is_x_only());
}

TEST(Quotient, AdOfRealAndImaginaryParts) {
  const double a = 0.7;
  const Eigen::Matrix4d m = ad_on_quotient(cd(a, 0));
  Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
  expected.diagonal() << std::exp(-a), std::exp(-a), std::exp(a), std::exp(a);
  EXPECT_LT((m - expected).norm(), 1e-12);
  // x = i pi acts as -1 on both lines.
  EXPECT_LT((ad_on_quotient(cd(0, std::numbers::pi)) + Eigen::Matrix4d::Identity()).norm(), 1e-12);
  // x = i pi / 2 acts as a rotation by a quarter turn.
  const Eigen::Matrix4d r = ad_on_quotient(cd(0, std::numbers::pi / 2));
  EXPECT_LT((r * r + Eigen::Matrix4d::Identity()).norm(), 1e-12);
}

TEST(RealSemisimple, Cases) {
  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(3, 3);
  diag.diagonal() << 2.0, 2.0, -1.0;
  EXPECT_TRUE(real_semisimple(diag));
  EXPECT_TRUE(real_semisimple_by_eigenvectors(diag));

  Eigen::MatrixXd jordan(2, 2);
  jordan << 1.0, 1.0, 0.0, 1.0;
  EXPECT_FALSE(real_semisimple(jordan));
  EXPECT_FALSE(real_semisimple_by_eigenvectors(jordan));

  Eigen::MatrixXd rot(2, 2);
  rot << 0.0, -1.0, 1.0, 0.0;
  EXPECT_FALSE(real_semisimple(rot));
  EXPECT_FALSE(real_semisimple_by_eigenvectors(rot));
}

TEST(DimW, Examples) {
  EXPECT_EQ(dim_W(lattice::example2_spec()), 0);
  EXPECT_EQ(dim_W(lattice::example3_spec()), 2);
  EXPECT_EQ(dim_W(lattice::iwasawa_spec()), 0);
  EXPECT_EQ(dim_W(lattice::LatticeSpecAbelian{}), 0);
}

TEST(DimW, InvalidSpecThrows) {
  auto s = lattice::example2_spec();
  s.gamma *= 2.0;
  EXPECT_THROW(dim_W(s), ClassificationError);
  EXPECT_THROW(h1(s), ClassificationError);
}

TEST(H1, Table) {
  const std::vector<std::pair<lattice::LatticeSpec, int>> cases{
      {lattice::LatticeSpecAbelian{}, 3},
      {lattice::iwasawa_spec(), 2},
      {lattice::example2_spec(), 1},
      {lattice::example3_spec(), 3},
  };
  for (const auto& [spec, expected] : cases) {
    const auto r = h1(spec);
    EXPECT_EQ(r.h1, expected) << lattice::to_string(r.kind);
    EXPECT_EQ(r.h1, r.dim_h1_lie + r.dim_W);
    const auto t = h1_for_class(r.kind);
    EXPECT_EQ(t.h1, r.h1);
    EXPECT_EQ(t.dim_W, r.dim_W);
  }
  EXPECT_EQ(h1(lattice::example3_spec()).kind, lattice::Classification::Type3b);
}

// Property: the Ad-semisimplicity computation agrees with the gamma, delta in R shortcut.
TEST(Property, DimWMatchesShortcut) {
  std::mt19937_64 rng(51);
  int real_cases = 0, complex_cases = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const lattice::LatticeSpec s = lattice::example3_spec(lattice::random_hyperbolic_sl2(rng));
    EXPECT_EQ(dim_W(s), dim_W_shortcut(s));
    real_cases += dim_W(s) == 2;
  }
  for (int trial = 0; trial < 25; ++trial) {
    const lattice::LatticeSpec s = lattice::type3a_spec(lattice::random_type3a_matrix(rng));
    EXPECT_EQ(dim_W(s), dim_W_shortcut(s));
    complex_cases += dim_W(s) == 0;
  }
  EXPECT_EQ(real_cases, 50);
  EXPECT_EQ(complex_cases, 25);
}

// Property: products of generator actions stay real-semisimple when the generators are.
TEST(Property, GeneratorProductsStaySemisimple) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<int> power(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const lattice::LatticeSpec s = lattice::example3_spec(lattice::random_hyperbolic_sl2(rng, 12));
    const auto gens = lattice::lambda_generators(s);
    const int p = power(rng), q = power(rng);
    const Eigen::Matrix4d word = ad_on_quotient(double(p) * gens[0] + double(q) * gens[1]);
    const Eigen::Matrix4d product = int_power(ad_on_quotient(gens[0]), p) * int_power(ad_on_quotient(gens[1]), q);
    EXPECT_LT((word - product).norm(), 1e-8 * std::max(1.0, word.norm()));
    EXPECT_TRUE(real_semisimple(word));
  }
}
