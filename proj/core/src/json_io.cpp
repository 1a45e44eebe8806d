#include "f4rigid/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace f4rigid {

namespace {

Json ivec_to_json(const IVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json imat_to_json(const IMat& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(ivec_to_json(row));
  return a;
}

}  // namespace

Json datum_to_json(const RootDatum& datum) {
  Json j;
  j["label"] = datum.label;
  j["rank"] = datum.rank;
  j["cartan"] = imat_to_json(datum.cartan);
  Json roots = Json::array();
  for (const auto& p : datum.roots) {
    Json r;
    r["root"] = ivec_to_json(p.root);
    r["coroot"] = ivec_to_json(p.coroot);
    roots.push_back(std::move(r));
  }
  j["roots"] = std::move(roots);
  return j;
}

Json poly_to_json(const IntPolynomial& p, const std::string& factored) {
  Json j;
  j["degree"] = p.degree();
  Json coeffs = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    coeffs.push_back(Json::array({it->first, it->second.str()}));
  j["coeffs"] = std::move(coeffs);
  j["factored"] = factored.empty() ? p.to_string() : factored;
  return j;
}

Json torus_point_to_json(const TorusPoint& t) {
  Json a = Json::array();
  for (const auto& c : t.coords) a.push_back(frac_string(c));
  return a;
}

Json semisimple_class_to_json(const SemisimpleClass& c) {
  Json j;
  j["rep"] = torus_point_to_json(c.representative);
  j["orbit_size"] = c.orbit_size;
  j["centralizer_type"] = c.centralizer.to_string();
  return j;
}

Json weight_system_to_json(const WeightSystem& ws) {
  Json j;
  j["index"] = ws.levi_index;
  j["highest_weight"] = ivec_to_json(ws.highest_weight);
  j["dimension"] = ws.dimension;
  Json weights = Json::array();
  for (const auto& [w, mult] : ws.weights) {
    Json entry;
    entry["weight"] = ivec_to_json(w);
    entry["multiplicity"] = mult;
    weights.push_back(std::move(entry));
  }
  j["weights"] = std::move(weights);
  return j;
}

Json fusion_table_to_json(const FusionTable& table) {
  Json j;
  j["index"] = table.levi_index;
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r;
    r["rep"] = torus_point_to_json(row.representative);
    r["orbit_size"] = row.orbit_size;
    r["g_class"] = to_string(row.g_class);
    r["in_derived"] = row.in_derived;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json eigen_data_to_json(const InvolutionEigenData& e) {
  Json j;
  j["dim_plus"] = e.dim_plus;
  j["dim_minus"] = e.dim_minus;
  return j;
}

Json case_report_to_json(const CaseReport& report) {
  Json j;
  j["levi_index"] = report.levi_index;
  j["dimension"] = report.dimension;
  j["max_jordan_blocks"] = report.max_jordan_blocks;
  Json pairs = Json::array();
  for (const auto& p : report.pairs) {
    Json e;
    e["x_rep"] = torus_point_to_json(p.x_rep);
    e["ys_rep"] = torus_point_to_json(p.ys_rep);
    e["x_eigen"] = eigen_data_to_json(p.x_eigen);
    e["ys_eigen"] = eigen_data_to_json(p.ys_eigen);
    e["bound"] = p.bound;
    e["margin"] = p.margin;
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  j["vacuous"] = report.vacuous;
  j["minimal_margin"] = report.minimal_margin;
  j["contradiction_holds"] = report.contradiction_holds;
  return j;
}

Json class_partition_to_json(const ClassPartition& part) {
  Json a = Json::array();
  for (const auto& c : part.classes) {
    Json j;
    j["name"] = c.name;
    Json rep = Json::array();
    for (int img : c.representative) rep.push_back(img + 1);
    j["rep"] = std::move(rep);
    j["size"] = c.size;
    j["element_order"] = c.element_order;
    j["centralizer_order"] = c.centralizer_order;
    a.push_back(std::move(j));
  }
  return a;
}

Json rigidity_report_to_json(const RigidityReport& report) {
  Json j;
  j["triple_count"] = report.triple_count;
  j["generating_count"] = report.generating_count;
  j["orbit_count"] = report.orbit_count;
  j["regular"] = report.regular;
  j["rigid"] = report.rigid;
  j["center_trivial"] = report.center_trivial;
  j["classes_rational"] = Json::array(
      {report.classes_rational[0], report.classes_rational[1], report.classes_rational[2]});
  j["rationally_rigid"] = report.rationally_rigid;
  return j;
}

Json validation_to_json(const TableValidation& v) {
  Json j;
  j["valid"] = v.valid;
  Json viol = Json::array();
  for (const auto& s : v.violations) viol.push_back(s);
  j["violations"] = std::move(viol);
  return j;
}

Json cyclotomic_to_json(const Cyclotomic& value) {
  Json j;
  j["n"] = value.conductor();
  Json coeffs = Json::array();
  const auto& c = value.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) coeffs.push_back(Json::array({k, frac_string(c[k])}));
  j["coeffs"] = std::move(coeffs);
  return j;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_string()) return Cyclotomic(parse_frac(j.get<std::string>()));
  if (j.is_number_integer()) return Cyclotomic(Rat(j.get<std::int64_t>()));
  const int n = j.at("n").get<int>();
  std::vector<std::pair<std::int64_t, Rat>> terms;
  for (const auto& pair : j.at("coeffs"))
    terms.emplace_back(pair.at(0).get<std::int64_t>(), parse_frac(pair.at(1).get<std::string>()));
  return Cyclotomic::from_terms(n, terms);
}

PermGroup perm_group_from_json(const Json& j) {
  const int degree = j.at("degree").get<int>();
  std::vector<Perm> gens;
  for (const auto& g : j.at("generators")) {
    Perm p;
    for (const auto& img : g) p.push_back(img.get<int>() - 1);
    gens.push_back(std::move(p));
  }
  return PermGroup(degree, std::move(gens));
}

Json perm_group_to_json(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  Json gens = Json::array();
  for (const auto& gen : g.generators()) {
    Json one = Json::array();
    for (int img : gen) one.push_back(img + 1);
    gens.push_back(std::move(one));
  }
  j["generators"] = std::move(gens);
  return j;
}

CharacterTable character_table_from_json(const Json& j) {
  CharacterTable t;
  t.order = j.at("order").get<long long>();
  for (const auto& c : j.at("classes")) {
    TableClass tc;
    tc.name = c.at("name").get<std::string>();
    tc.size = c.at("size").get<long long>();
    tc.element_order = c.at("element_order").get<int>();
    t.classes.push_back(std::move(tc));
  }
  for (const auto& row : j.at("chars")) {
    std::vector<Cyclotomic> values;
    for (const auto& v : row) values.push_back(cyclotomic_from_json(v));
    t.chars.push_back(std::move(values));
  }
  return t;
}

Json character_table_to_json(const CharacterTable& t) {
  Json j;
  j["order"] = t.order;
  Json classes = Json::array();
  for (const auto& c : t.classes) {
    Json one;
    one["name"] = c.name;
    one["size"] = c.size;
    one["element_order"] = c.element_order;
    classes.push_back(std::move(one));
  }
  j["classes"] = std::move(classes);
  Json chars = Json::array();
  for (const auto& row : t.chars) {
    Json one = Json::array();
    for (const auto& v : row) one.push_back(cyclotomic_to_json(v));
    chars.push_back(std::move(one));
  }
  j["chars"] = std::move(chars);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("cannot parse " + path + ": " + e.what());
  }
  return j;
}

}  // namespace f4rigid
