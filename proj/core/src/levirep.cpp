#include "f4rigid/levirep.hpp"

#include "f4rigid/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace f4rigid {

namespace {

void require_f4(const RootDatum& datum, const char* who) {
  if (!datum.generated || datum.rank != 4 || datum.node_count() != 4)
    throw std::invalid_argument(std::string(who) + " needs the generated rank-4 datum");
}

std::vector<WeylElement> levi_generators(const RootDatum& f4, int levi_index) {
  if (levi_index < 1 || levi_index > 4) throw std::out_of_range("levi index must be 1..4");
  const auto refl = simple_reflections(f4);
  std::vector<WeylElement> gens;
  for (int k = 0; k < f4.node_count(); ++k)
    if (f4.nodes[k] != levi_index) gens.push_back(refl[k]);
  return gens;
}

}  // namespace

WeightSystem weight_system(const RootDatum& f4, int levi_index) {
  require_f4(f4, "weight_system");
  if (levi_index < 1 || levi_index > 4) throw std::out_of_range("levi index must be 1..4");
  static const IVec highest[5] = {{}, {0, 0, 0, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}};
  static const int expected_dim[5] = {0, 6, 2, 3, 7};

  WeightSystem ws;
  ws.levi_index = levi_index;
  ws.highest_weight = highest[levi_index];
  const auto orbit = weyl_orbit_x(levi_generators(f4, levi_index), ws.highest_weight);
  for (const auto& w : orbit) ws.weights.emplace_back(w, 1);
  if (levi_index == 4) ws.weights.emplace_back(IVec(4, 0), 1);
  std::sort(ws.weights.begin(), ws.weights.end());
  for (const auto& [w, mult] : ws.weights) ws.dimension += mult;
  if (ws.dimension != expected_dim[levi_index])
    throw std::logic_error("weight system dimension mismatch for L" + std::to_string(levi_index));
  return ws;
}

InvolutionEigenData eigen_dims(const WeightSystem& ws, const TorusPoint& t) {
  InvolutionEigenData e;
  const Rat half(1, 2);
  for (const auto& [weight, mult] : ws.weights) {
    const Rat v = evaluate(t, weight);
    if (v == 0)
      e.dim_plus += mult;
    else if (v == half)
      e.dim_minus += mult;
    else
      throw std::invalid_argument("point is not an involution on this weight system (value " +
                                  frac_string(v) + ")");
  }
  return e;
}

std::string to_string(GClass c) {
  switch (c) {
    case GClass::x: return "x";
    case GClass::y_s: return "y_s";
    case GClass::other: return "other";
  }
  return "other";
}

FusionTable involution_fusion(const RootDatum& f4, int levi_index) {
  require_f4(f4, "involution_fusion");
  const auto gens_l = levi_generators(f4, levi_index);
  const auto gens_g = simple_reflections(f4);

  // ambient orbit labels on the nontrivial 2-torsion points
  const SubsystemType type_x = SubsystemType::parse("A1+C3");
  const SubsystemType type_ys = SubsystemType::parse("B4");
  std::map<TorusPoint, GClass> ambient;
  for (const auto& cls : semisimple_classes(f4, 2)) {
    if (cls.representative.is_zero()) continue;
    GClass label = GClass::other;
    if (cls.centralizer == type_x) label = GClass::x;
    if (cls.centralizer == type_ys) label = GClass::y_s;
    for (const auto& t : weyl_orbit_torus(gens_g, cls.representative)) ambient.emplace(t, label);
  }

  FusionTable table;
  table.levi_index = levi_index;
  const auto points = torsion_points(f4, 2);
  std::map<TorusPoint, bool> visited;
  for (const auto& t : points) {
    if (t.is_zero() || visited.count(t)) continue;
    const auto orbit = weyl_orbit_torus(gens_l, t);  // sorted; t is the minimum (ascending scan)
    for (const auto& u : orbit) visited.emplace(u, true);
    FusionRow row;
    row.representative = orbit.front();
    row.orbit_size = orbit.size();
    row.g_class = ambient.at(row.representative);
    row.in_derived = levi_derived_membership(row.representative, levi_index).in_derived;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace f4rigid
