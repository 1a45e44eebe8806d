#include "f4rigid/torus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace f4rigid {

TorusPoint TorusPoint::zero(int rank) {
  TorusPoint t;
  t.coords.assign(rank, Rat(0));
  return t;
}

bool TorusPoint::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

std::int64_t TorusPoint::order() const {
  std::int64_t l = 1;
  for (const auto& c : coords) {
    const std::int64_t d = static_cast<std::int64_t>(denominator(c));
    l = std::lcm(l, d);
  }
  return l;
}

TorusPoint make_torus_point(std::vector<Rat> coords) {
  TorusPoint t;
  t.coords.reserve(coords.size());
  for (auto& c : coords) t.coords.push_back(mod1(c));
  return t;
}

TorusPoint torus_apply(const TorusPoint& t, const WeylElement& w) {
  const std::size_t n = t.coords.size();
  if (w.my.size() != n) throw std::invalid_argument("torus point / element rank mismatch");
  std::vector<Rat> out(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (t.coords[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += t.coords[i] * w.my[i][j];
  }
  return make_torus_point(std::move(out));
}

std::vector<TorusPoint> weyl_orbit_torus(const std::vector<WeylElement>& generators,
                                         const TorusPoint& start) {
  return orbit_closure(generators, start,
                       [](const TorusPoint& t, const WeylElement& w) { return torus_apply(t, w); });
}

std::vector<TorusPoint> torsion_points(const RootDatum& datum, int n) {
  if (n < 1) throw std::invalid_argument("torsion order must be >= 1");
  std::int64_t total = 1;
  for (int i = 0; i < datum.rank; ++i) {
    total *= n;
    if (total > kTorsionCap) throw std::runtime_error("torsion point count exceeds cap");
  }
  std::vector<TorusPoint> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> digits(datum.rank, 0);
  while (true) {
    std::vector<Rat> coords;
    coords.reserve(datum.rank);
    for (int d : digits) coords.emplace_back(d, n);
    out.push_back(make_torus_point(std::move(coords)));
    int pos = datum.rank - 1;
    while (pos >= 0 && ++digits[pos] == n) digits[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

Rat evaluate(const TorusPoint& t, const IVec& weight) {
  if (t.coords.size() != weight.size())
    throw std::invalid_argument("evaluate: weight/point dimension mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < weight.size(); ++i)
    if (weight[i] != 0) s += Rat(weight[i]) * t.coords[i];
  return mod1(s);
}

SubsystemType centralizer_type(const RootDatum& datum, const TorusPoint& t) {
  if (!datum.generated) throw std::invalid_argument("centralizer_type needs generated roots");
  std::vector<RootPair> kernel;
  for (const auto& p : datum.roots)
    if (evaluate(t, p.root) == 0) kernel.push_back(p);
  return classify_subsystem(datum, kernel);
}

std::vector<SemisimpleClass> semisimple_classes(const RootDatum& datum, int n) {
  const auto points = torsion_points(datum, n);  // lexicographically sorted
  const auto generators = simple_reflections(datum);
  auto point_index = [&points](const TorusPoint& t) {
    const auto it = std::lower_bound(points.begin(), points.end(), t);
    if (it == points.end() || !(*it == t))
      throw std::logic_error("orbit left the torsion point set");
    return static_cast<std::size_t>(it - points.begin());
  };
  std::vector<bool> visited(points.size(), false);
  std::vector<SemisimpleClass> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (visited[i]) continue;
    // ascending scan makes the first unvisited point the orbit minimum
    SemisimpleClass cls;
    cls.representative = points[i];
    visited[i] = true;
    cls.orbit_size = 1;
    std::vector<std::size_t> work{i};
    while (!work.empty()) {
      const TorusPoint t = points[work.back()];
      work.pop_back();
      for (const auto& g : generators) {
        const std::size_t j = point_index(torus_apply(t, g));
        if (!visited[j]) {
          visited[j] = true;
          ++cls.orbit_size;
          work.push_back(j);
        }
      }
    }
    cls.centralizer = centralizer_type(datum, cls.representative);
    out.push_back(std::move(cls));
  }
  return out;
}

LeviMembership levi_derived_membership(const TorusPoint& t, int node) {
  if (node < 1 || node > static_cast<int>(t.coords.size()))
    throw std::out_of_range("node index out of range");
  const Rat& c = t.coords[node - 1];
  return {c, c == 0};
}

}  // namespace f4rigid
