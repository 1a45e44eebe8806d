#pragma once

#include "f4rigid/permgroup.hpp"

#include <array>

namespace f4rigid {

struct RigidityReport {
  long long triple_count = 0;      // product-one triples from the classes
  long long generating_count = 0;  // those whose pair (x, y) generates G
  long long orbit_count = 0;       // conjugation orbits on generating triples
  bool regular = false;            // every orbit has size |G|
  bool rigid = false;              // exactly one regular orbit
  bool center_trivial = false;
  std::array<bool, 3> classes_rational{};
  bool rationally_rigid = false;   // rigid and all three classes rational
};

/// Full enumeration: product-one triples, generation test by subgroup
/// closure of (x, y), orbits of simultaneous conjugation.
RigidityReport is_rigid(const PermGroup& g, const ClassPartition& part, int c1, int c2, int c3);

}  // namespace f4rigid
