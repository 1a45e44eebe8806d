#pragma once

#include "f4rigid/cyclotomic.hpp"
#include "f4rigid/permgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace f4rigid {

struct TableClass {
  std::string name;
  long long size = 0;
  int element_order = 0;
};

/// Ingested character table; rows of `chars` are the irreducible characters,
/// columns follow `classes`. The first class must be the identity class.
struct CharacterTable {
  long long order = 0;
  std::vector<TableClass> classes;
  std::vector<std::vector<Cyclotomic>> chars;

  int class_index(const std::string& name) const;  // throws when absent
};

struct TableValidation {
  bool valid = false;
  std::vector<std::string> violations;
};

/// Exact orthogonality audit: row and column orthogonality, degree integrality,
/// degree-square sum, class size sum. Every violated relation is listed.
TableValidation validate_table(const CharacterTable& t);

/// |G| / (z1 z2 z3) * sum_chi chi(c1) chi(c2) chi(c3) / chi(1), the z_i being
/// centralizer orders. Equals count_triples / |G| for the matching group.
/// Precondition: the table validates.
Cyclotomic structure_constant(const CharacterTable& t, int c1, int c2, int c3);

/// Mismatch report when the table's class data disagree with a computed
/// partition (by name, size and element order); nullopt when aligned.
std::optional<std::string> table_class_mismatch(const CharacterTable& t,
                                                const ClassPartition& part);

}  // namespace f4rigid
