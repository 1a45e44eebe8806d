#pragma once

#include "f4rigid/numeric.hpp"
#include "f4rigid/rootdata.hpp"
#include "f4rigid/weyl.hpp"

#include <cstdint>
#include <vector>

namespace f4rigid {

/// Finite-order point of T = Y (x) (Q/Z), coordinates normalized to [0, 1).
struct TorusPoint {
  std::vector<Rat> coords;

  static TorusPoint zero(int rank);
  bool is_zero() const;
  std::int64_t order() const;  // lcm of denominators

  bool operator==(const TorusPoint& o) const { return coords == o.coords; }
  bool operator<(const TorusPoint& o) const { return coords < o.coords; }
};

/// Normalizes every coordinate into [0, 1).
TorusPoint make_torus_point(std::vector<Rat> coords);

/// Action through Y coordinates, reduced mod 1.
TorusPoint torus_apply(const TorusPoint& t, const WeylElement& w);

std::vector<TorusPoint> weyl_orbit_torus(const std::vector<WeylElement>& generators,
                                         const TorusPoint& start);

inline constexpr std::int64_t kTorsionCap = 10'000'000;

/// All n^rank points with coordinates in (1/n)Z, lexicographically ordered.
std::vector<TorusPoint> torsion_points(const RootDatum& datum, int n);

/// Sum_i weight_i * t_i mod 1.
Rat evaluate(const TorusPoint& t, const IVec& weight);

/// Type of the subsystem of roots vanishing on t.
SubsystemType centralizer_type(const RootDatum& datum, const TorusPoint& t);

struct SemisimpleClass {
  TorusPoint representative;  // lexicographically least orbit member
  std::size_t orbit_size = 0;
  SubsystemType centralizer;
};

/// W-orbit partition of the n-torsion points, one entry per orbit, sorted by
/// representative. Centralizer types are taken in the datum's own root system.
std::vector<SemisimpleClass> semisimple_classes(const RootDatum& datum, int n);

struct LeviMembership {
  Rat coordinate;
  bool in_derived = false;
};

/// t_i and the test t_i = 0 deciding membership in T `intersect` L_i'.
/// t_i is constant on W_{L_i}-orbits.
LeviMembership levi_derived_membership(const TorusPoint& t, int node);

}  // namespace f4rigid
