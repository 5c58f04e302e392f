#pragma once

#include "solvlie/lie/algebra.hpp"

#include <string>
#include <vector>

namespace solvlie::lie {

/// The three unimodular solvable complex Lie algebras of dimension 3.
enum class AlgebraKind { Abelian, Nilpotent, NonNilpotent };

std::string to_string(AlgebraKind kind);
AlgebraKind parse_algebra_kind(std::string_view name);

struct CatalogEntry {
  AlgebraKind kind;
  StructureAlgebra complex_algebra;  // basis X, Y, Z over C
  StructureAlgebra real_form;        // basis X, X', Y, Y', Z, Z' with X' = iX etc.
  std::vector<std::size_t> nilradical_indices;  // into the real-form basis
};

/// Real Lie algebra underlying a complex one given by rational constants.
/// Basis order e_1, i e_1, e_2, i e_2, ...; labels get a trailing prime for the i-multiples.
StructureAlgebra realify(const StructureAlgebra& complex_algebra);

/// The six-dimensional real form of the non-nilpotent type, written out bracket by bracket.
StructureAlgebra non_nilpotent_real_form();

const CatalogEntry& catalog_entry(AlgebraKind kind);
const std::vector<CatalogEntry>& catalog();

/// The nilradical metadata spans an ideal whose lower central series reaches 0.
bool nilradical_consistent(const CatalogEntry& entry);

}  // namespace solvlie::lie
