#pragma once

#include "solvlie/kernel/matrix.hpp"
#include "solvlie/kernel/numeric.hpp"
#include "solvlie/lattice/group.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace solvlie::lattice {

/// Four classes of three-dimensional complex solvmanifolds.
enum class Classification { Type1, Type2, Type3a, Type3b };

std::string to_string(Classification c);
Classification parse_classification(std::string_view name);

/// Lattice of C^3 (abelian type). An empty generator list stands for Z[i]^3.
struct LatticeSpecAbelian {
  std::vector<std::array<cd, 3>> generators;
};

/// Lattice Delta x| Lambda of the nilpotent group: Lambda = <1, lambda>,
/// Delta = <(alpha_1, beta_1), (alpha_2, beta_2), (0, alpha_1), (0, alpha_2)>,
/// with A * alpha = lambda * alpha for A in GL(2, Z).
struct LatticeSpecNil {
  IntMatrix a;
  cd lambda;
  std::array<cd, 2> alpha{};
  std::array<cd, 2> beta{};
};

/// Lattice Delta x| Lambda of the non-nilpotent group: Delta generated by (alpha_i, beta_i),
/// A alpha = gamma^-1 alpha, A beta = gamma beta, B alpha = delta^-1 alpha, B beta = delta beta,
/// Lambda = <log gamma, mu> where mu = k_mu * pi * i when k_mu is given and log delta otherwise.
struct LatticeSpecSolv {
  IntMatrix a;
  IntMatrix b;
  cd gamma;
  cd delta;
  std::array<cd, 4> alpha{};
  std::array<cd, 4> beta{};
  std::optional<long long> k_mu;
};

using LatticeSpec = std::variant<LatticeSpecAbelian, LatticeSpecNil, LatticeSpecSolv>;

/// Ordered list of named boolean checks.
class CheckList {
 public:
  void add(std::string name, bool ok) { items_.emplace_back(std::move(name), ok); }
  bool get(std::string_view name) const;
  bool all() const;
  const std::vector<std::pair<std::string, bool>>& items() const { return items_; }

 private:
  std::vector<std::pair<std::string, bool>> items_;
};

struct AbelianReport {
  CheckList checks;
  bool valid() const { return checks.all(); }
};

struct NilReport {
  std::string path;  // "generic" or "gaussian_integer"
  CheckList checks;
  std::vector<std::string> notes;
  bool valid() const { return checks.all(); }
};

struct SolvReport {
  CheckList checks;
  cd lambda;
  cd mu;
  double generator_determinant = 0.0;
  Classification subtype = Classification::Type3a;
  std::vector<std::string> notes;
  bool valid() const { return checks.all(); }
};

/// Real 4x4 matrix whose columns are the Delta generators written as (Re y, Im y, Re z, Im z).
Eigen::Matrix4d delta_generator_matrix(const std::array<std::array<cd, 2>, 4>& generators);
std::array<std::array<cd, 2>, 4> delta_generators(const LatticeSpecNil& spec);
std::array<std::array<cd, 2>, 4> delta_generators(const LatticeSpecSolv& spec);

AbelianReport verify_lattice_abelian(const LatticeSpecAbelian& spec, double tol = kDefaultTol);
NilReport verify_lattice_nil(const LatticeSpecNil& spec, double tol = kDefaultTol);
SolvReport verify_lattice_solv(const LatticeSpecSolv& spec, double tol = kDefaultTol);

/// Closure of the Gaussian-integer points of the nilpotent group under multiplication
/// and inversion, checked exactly on all generator pairs and `random_words` seeded words.
bool gaussian_integer_closure(int random_words = 200, unsigned long long seed = 1);

/// lambda = Log gamma (principal branch); mu = k_mu * pi * i or Log delta.
std::pair<cd, cd> lattice_logarithms(const LatticeSpecSolv& spec);

/// x-parts of the Lambda generators (Delta generators have x-part 0).
std::vector<cd> lambda_generators(const LatticeSpec& spec);

/// Classification of a valid spec; throws ClassificationError for an invalid one.
Classification classify(const LatticeSpec& spec, double tol = kDefaultTol);

/// Dimension-3 catalog kind of a class (Type3a and Type3b share the non-nilpotent algebra).
int catalog_index(Classification c);

}  // namespace solvlie::lattice
