#pragma once

#include "f4rigid/linalg.hpp"
#include "f4rigid/qpoly.hpp"
#include "f4rigid/rootdata.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace f4rigid {

/// A Weyl group element. mx acts on X (x -> x*mx), my is the inverse
/// transpose of mx and acts on Y; both are kept so orbit code never inverts.
struct WeylElement {
  IMat mx;
  IMat my;

  static WeylElement identity_element(int rank);
  static WeylElement from_x_matrix(const IMat& m);

  /// Composition "apply *this, then o".
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;  // mx' = my^T, my' = mx^T
  int order() const;

  bool operator==(const WeylElement& o) const { return mx == o.mx; }
  bool operator<(const WeylElement& o) const { return mx < o.mx; }
};

struct WeylGroup {
  RootDatum datum;  // generated source datum
  std::vector<WeylElement> elements;  // sorted lexicographically by mx
  std::vector<WeylElement> generators;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> index_of(const WeylElement& w) const;
  bool contains(const WeylElement& w) const { return index_of(w).has_value(); }
};

/// One order-2 reflection per node of the datum.
std::vector<WeylElement> simple_reflections(const RootDatum& datum);

inline constexpr std::size_t kWeylEnumerationCap = 1'000'000;
inline constexpr std::size_t kOrbitCap = 1'000'000;

/// Closure of the simple reflections under multiplication.
WeylGroup enumerate_weyl(const RootDatum& datum);

/// Generic orbit closure under a generator action, canonically sorted.
template <class Point, class Apply>
std::vector<Point> orbit_closure(const std::vector<WeylElement>& generators, const Point& start,
                                 Apply apply, std::size_t cap = kOrbitCap) {
  std::set<Point> seen{start};
  std::vector<Point> work{start};
  while (!work.empty()) {
    Point p = std::move(work.back());
    work.pop_back();
    for (const auto& g : generators) {
      Point q = apply(p, g);
      if (seen.insert(q).second) {
        if (seen.size() > cap) throw std::runtime_error("orbit enumeration cap exceeded");
        work.push_back(std::move(q));
      }
    }
  }
  return std::vector<Point>(seen.begin(), seen.end());
}

std::vector<IVec> weyl_orbit_x(const std::vector<WeylElement>& generators, const IVec& point);
std::vector<IVec> weyl_orbit_y(const std::vector<WeylElement>& generators, const IVec& point);

struct WeylClass {
  WeylElement representative;  // lexicographically least member
  std::size_t size = 0;
};

/// Conjugacy classes, sorted by (size, representative).
std::vector<WeylClass> conjugacy_classes(const WeylGroup& group);

struct CoxeterData {
  int coxeter_number = 0;
  std::vector<int> exponents;  // sorted, one per node counting multiplicity
  std::vector<int> degrees;    // exponents + 1
};

/// Per irreducible component, from the eigenvalue phases of the product of
/// the component's simple reflections; merged for reducible data.
CoxeterData coxeter_data(const RootDatum& datum);

/// Number of positive roots sent to negative roots by w.
int length(const WeylGroup& group, const WeylElement& w);

}  // namespace f4rigid
