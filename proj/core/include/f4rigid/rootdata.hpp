#pragma once

#include "f4rigid/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace f4rigid {

/// Multiset of irreducible Dynkin components, rendered canonically
/// (letter ascending, then rank descending), e.g. "A1+C3", "A2+A1".
struct SubsystemType {
  std::vector<std::pair<char, int>> components;

  static SubsystemType single(char letter, int rank);
  static SubsystemType parse(const std::string& text);  // "A1+C3"
  void canonicalize();
  int total_rank() const;
  std::string to_string() const;
  bool operator==(const SubsystemType& o) const { return components == o.components; }
};

/// A root with its coroot. simple_coeffs expresses the root in the datum's
/// simple-root basis; entries are all >= 0 or all <= 0.
struct RootPair {
  IVec root;           // X coordinates (fundamental-weight basis)
  IVec coroot;         // Y coordinates (simple-coroot basis)
  IVec simple_coeffs;  // indexed by node position
  bool positive() const;
};

/// Root datum in a fixed coordinate pair: the X basis is the fundamental
/// weights, the Y basis is the simple coroots, and the rows of `cartan` are
/// the simple roots written in X coordinates (the transposed Cartan matrix).
/// Entry cartan[i][j] = pairing(alpha_i, alpha_j^vee).
struct RootDatum {
  std::string label;
  int rank = 0;            // ambient lattice rank
  std::vector<int> nodes;  // 1-based node labels; a subset of 1..rank for Levi data
  IMat cartan;             // nodes x nodes
  std::vector<IVec> simple_roots;    // length-`rank` vectors, one per node
  std::vector<IVec> simple_coroots;  // ditto
  std::vector<RootPair> roots;       // generated, sorted lexicographically by root
  bool generated = false;

  int node_count() const { return static_cast<int>(nodes.size()); }
  /// Position of a 1-based node label in `nodes`; throws if absent.
  int node_position(int node) const;
  /// Index into `roots` of the pair with this root vector, after generation.
  std::optional<std::size_t> root_index(const IVec& root) const;
  std::size_t positive_count() const;
};

/// Builds a datum from the matrix whose rows are the simple roots in
/// fundamental-weight coordinates. Validates the Cartan axioms: 2s on the
/// diagonal, non-positive integers off it, zero iff the mirror entry is zero.
RootDatum build_root_datum(const IMat& cartan, const std::string& label);

/// Closes the simple root pairs under all simple reflections. Idempotent.
RootDatum generate_roots(RootDatum datum);

/// Dual-basis pairing between an X vector and a Y vector.
std::int64_t pairing(const IVec& x, const IVec& y);

/// Sub-datum at the nodes other than `removed_node` (1-based label). Vectors
/// keep the ambient rank so torus evaluation needs no basis change. Roots are
/// not generated. Label "L<i>".
RootDatum levi_datum(const RootDatum& datum, int removed_node);

/// Dynkin type of a negation-closed subset of the datum's roots: picks the
/// lexicographically positive half, extracts its simple system, and matches
/// Cartan blocks against the irreducible catalogue (ranks <= 4).
SubsystemType classify_subsystem(const RootDatum& datum, const std::vector<RootPair>& subset);

/// Cartan matrix of an irreducible type in the rows-are-roots convention.
/// Supported: A1..A4, B2..B4, C3, C4, D4, F4, G2.
IMat irreducible_cartan(char letter, int rank);

/// Standalone datum of the given (possibly reducible) type, block-diagonal
/// Cartan matrix, roots not generated.
RootDatum catalogue_datum(const SubsystemType& type, const std::string& label = "");

}  // namespace f4rigid
