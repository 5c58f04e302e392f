#pragma once

#include "solvlie/io/json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace solvlie::cli {

using json = nlohmann::json;

struct Options {
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

/// Result of one command. Keys are emitted sorted, so dumps are byte-stable.
struct RunReport {
  std::string command;
  std::string inputs_digest;
  json results;
  bool pass = false;

  json to_json() const;
};

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

RunReport cmd_catalog(const Options& opt);

/// `algebra` is a catalog kind name ("abelian", "nilpotent", "non-nilpotent"; the real form is
/// used) or a path to an algebra JSON file.
RunReport cmd_integrable(const std::string& algebra, const std::string& j_path, const Options& opt);

RunReport cmd_lattice(const std::string& spec_path, const Options& opt);
RunReport cmd_h1(const std::string& spec_path, const Options& opt);
RunReport cmd_pseudokahler(const std::string& spec_path, const Options& opt);

/// Single frame from a file (Q = P = I when absent), or `random` seeded valid frames.
RunReport cmd_lemma2(const std::optional<std::string>& frame_path, std::optional<int> random, const Options& opt);

/// Writes the bundled example corpus (lattice specs, structures, algebra) into `dir`.
void export_examples(const std::string& dir);

}  // namespace solvlie::cli
