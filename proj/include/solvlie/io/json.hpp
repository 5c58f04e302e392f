#pragma once

#include "solvlie/complex/structures.hpp"
#include "solvlie/frames/frames.hpp"
#include "solvlie/lattice/spec.hpp"
#include "solvlie/lie/algebra.hpp"
#include "solvlie/winkelmann/h1.hpp"

#include <nlohmann/json.hpp>

#include <complex>
#include <string>

// JSON conventions: 0-based indices, complex numbers as [re, im], matrices row-major,
// exact rationals as "p/q" strings (plain integers are accepted too). Malformed input
// raises ParseError.
namespace solvlie::io {

using json = nlohmann::json;

Rational rational_from_json(const json& j);
json to_json(const Rational& r);

std::complex<double> complex_from_json(const json& j);
json to_json(std::complex<double> z);

QMatrix qmatrix_from_json(const json& j);
IntMatrix intmatrix_from_json(const json& j);
json to_json(const QMatrix& m);
json to_json(const IntMatrix& m);
json dmatrix_to_json(const Eigen::MatrixXd& m);
json cmatrix_to_json(const Eigen::MatrixXcd& m);

/// {"dim": n, "labels": [...], "brackets": [[i, j, ["p/q", ...]], ...]}
lie::StructureAlgebra algebra_from_json(const json& j);
json to_json(const lie::StructureAlgebra& g);

/// {"J": [[...], ...]} or a bare matrix.
cs::AlmostComplexStructure structure_from_json(const json& j);

/// {"type": "abelian" | "nilpotent" | "non-nilpotent", ...}
lattice::LatticeSpec lattice_spec_from_json(const json& j);
json to_json(const lattice::LatticeSpec& spec);

/// {"Q": [[...]], "P": [[...]]}
frames::FramePair frame_from_json(const json& j);
json to_json(const frames::FramePair& fp);

json to_json(const lattice::CheckList& c);
json to_json(const winkelmann::H1Report& r);
json to_json(const frames::Lemma2Report& r);

json read_file(const std::string& path);

}  // namespace solvlie::io
