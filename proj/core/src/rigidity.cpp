#include "f4rigid/rigidity.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace f4rigid {

namespace {

bool pair_generates(const PermGroup& g, const Perm& x, const Perm& y) {
  const std::size_t target = g.order();
  std::set<Perm> seen{perm_identity(g.degree())};
  std::vector<Perm> work(seen.begin(), seen.end());
  const Perm gens[2] = {x, y};
  while (!work.empty()) {
    const Perm p = work.back();
    work.pop_back();
    for (const auto& gen : gens) {
      Perm q = perm_compose(p, gen);
      if (seen.insert(q).second) {
        if (seen.size() == target) return true;  // subgroup can only grow to |G|
        work.push_back(std::move(q));
      }
    }
  }
  return seen.size() == target;
}

}  // namespace

RigidityReport is_rigid(const PermGroup& g, const ClassPartition& part, int c1, int c2, int c3) {
  for (int c : {c1, c2, c3})
    if (c < 0 || c >= static_cast<int>(part.classes.size()))
      throw std::out_of_range("class index out of range");
  const auto& els = g.elements();
  RigidityReport report;

  // center check: elements commuting with every generator
  std::size_t center_size = 0;
  for (const auto& z : els) {
    bool central = true;
    for (const auto& gen : g.generators())
      if (perm_compose(z, gen) != perm_compose(gen, z)) {
        central = false;
        break;
      }
    if (central) ++center_size;
  }
  report.center_trivial = (center_size == 1);

  report.classes_rational = {class_is_rational(g, part, c1), class_is_rational(g, part, c2),
                             class_is_rational(g, part, c3)};

  std::vector<std::size_t> m1, m2;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (part.class_of[i] == c1) m1.push_back(i);
    if (part.class_of[i] == c2) m2.push_back(i);
  }

  std::set<std::pair<std::size_t, std::size_t>> generating;
  for (const std::size_t xi : m1)
    for (const std::size_t yi : m2) {
      const Perm z = perm_inverse(perm_compose(els[xi], els[yi]));
      if (part.class_of[g.index_of(z)] != c3) continue;
      ++report.triple_count;
      if (pair_generates(g, els[xi], els[yi])) generating.emplace(xi, yi);
    }
  report.generating_count = static_cast<long long>(generating.size());

  // orbits of simultaneous conjugation on the generating triples
  std::set<std::pair<std::size_t, std::size_t>> unvisited = generating;
  bool all_regular = true;
  while (!unvisited.empty()) {
    std::vector<std::pair<std::size_t, std::size_t>> work{*unvisited.begin()};
    unvisited.erase(unvisited.begin());
    std::size_t orbit_size = 1;
    while (!work.empty()) {
      const auto [xi, yi] = work.back();
      work.pop_back();
      for (const auto& gen : g.generators()) {
        const std::size_t xj = g.index_of(perm_conjugate(els[xi], gen));
        const std::size_t yj = g.index_of(perm_conjugate(els[yi], gen));
        const auto it = unvisited.find({xj, yj});
        if (it != unvisited.end()) {
          unvisited.erase(it);
          ++orbit_size;
          work.emplace_back(xj, yj);
        }
      }
    }
    ++report.orbit_count;
    if (orbit_size != g.order()) all_regular = false;
  }
  report.regular = report.orbit_count > 0 && all_regular;
  report.rigid = report.regular && report.orbit_count == 1;
  report.rationally_rigid = report.rigid && report.classes_rational[0] &&
                            report.classes_rational[1] && report.classes_rational[2];
  return report;
}

}  // namespace f4rigid
