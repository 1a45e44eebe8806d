// Command-line front end: every subcommand emits a single run report on
// stdout (canonical JSON by default, --text for a human rendering) and uses
// the exit code contract 0 = success / all verdicts true, 1 = verification
// failure, 2 = usage or input error.

#include "CLI11.hpp"

#include <f4rigid/json_io.hpp>
#include <f4rigid/version.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace f4rigid;

RootDatum ambient_datum() {
  return generate_roots(
      build_root_datum({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}, "F4"));
}

struct CommandResult {
  Json inputs;
  Json results;
  std::string text;
  int exit_code = 0;
};

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(part);
  return out;
}

Json cyclotomic_value_json(const Cyclotomic& v) {
  if (v.is_rational()) return frac_string(v.to_rational());
  Json j = cyclotomic_to_json(v);
  j["display"] = v.to_string();
  return j;
}

std::string torus_point_text(const TorusPoint& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.coords.size(); ++i) {
    if (i) s += ",";
    s += frac_string(t.coords[i]);
  }
  return s + ")";
}

CommandResult run_dump_datum(int levi) {
  CommandResult r;
  r.inputs["levi"] = levi;
  RootDatum d = ambient_datum();
  if (levi != 0) d = generate_roots(levi_datum(d, levi));
  r.results = datum_to_json(d);
  std::ostringstream os;
  os << d.label << ": rank " << d.rank << ", " << d.roots.size() << " roots ("
     << d.positive_count() << " positive)\n";
  r.text = os.str();
  return r;
}

CommandResult run_involutions() {
  CommandResult r;
  r.inputs = Json::object();
  const RootDatum d = ambient_datum();
  Json classes = Json::array();
  std::ostringstream os;
  for (const auto& cls : semisimple_classes(d, 2)) {
    if (cls.representative.is_zero()) continue;
    classes.push_back(semisimple_class_to_json(cls));
    os << "rep " << torus_point_text(cls.representative) << "  orbit " << cls.orbit_size
       << "  centralizer " << cls.centralizer.to_string() << "\n";
  }
  r.results["classes"] = std::move(classes);
  r.text = os.str();
  return r;
}

CommandResult run_semisimple(int torsion, int characteristic) {
  CommandResult r;
  r.inputs["torsion"] = torsion;
  r.inputs["characteristic"] =
      characteristic == 0 ? Json("generic p > 3") : Json(characteristic);
  if (torsion < 1) throw CLI::ValidationError("semisimple", "--torsion must be >= 1");
  if (characteristic == 0) {
    int rest = torsion;
    for (int p : {2, 3})
      while (rest % p == 0) rest /= p;
    if (rest != 1 || torsion > 6)
      throw CLI::ValidationError(
          "semisimple", "with generic characteristic p > 3 only torsion orders 1,2,3,4,6 are "
                        "coprime to every good characteristic");
  } else {
    if (characteristic <= 3)
      throw CLI::ValidationError("semisimple", "--characteristic must be a good prime (> 3)");
    for (int f = 2; f * f <= characteristic; ++f)
      if (characteristic % f == 0)
        throw CLI::ValidationError("semisimple", "--characteristic must be prime");
    if (torsion % characteristic == 0)
      throw CLI::ValidationError("semisimple",
                                 "torsion order must be coprime to the characteristic");
  }
  const RootDatum d = ambient_datum();
  const auto found = semisimple_classes(d, torsion);
  Json classes = Json::array();
  std::ostringstream os;
  for (const auto& cls : found) {
    classes.push_back(semisimple_class_to_json(cls));
    os << "rep " << torus_point_text(cls.representative) << "  orbit " << cls.orbit_size
       << "  centralizer " << cls.centralizer.to_string() << "\n";
  }
  r.results["class_count"] = found.size();
  r.results["classes"] = std::move(classes);
  r.results["scope"] = "classes of the fixed torsion order only, not a generic-q class count";
  os << found.size() << " classes at torsion order " << torsion << "\n";
  r.text = os.str();
  return r;
}

CommandResult run_order_poly() {
  CommandResult r;
  r.inputs = Json::object();
  const RootDatum d = ambient_datum();
  const FactoredPoly factored = group_order_factored(d);
  const IntPolynomial poly = factored.expand();
  r.results["label"] = d.label;
  r.results["monic"] = poly.is_monic();
  Json pj = poly_to_json(poly, factored.to_string());
  for (auto& [key, value] : pj.items()) r.results[key] = value;
  std::ostringstream os;
  os << "|" << d.label << "(q)| = " << factored.to_string() << "\n"
     << "degree " << poly.degree() << (poly.is_monic() ? ", monic" : "") << "\n"
     << "expanded: " << poly.to_string() << "\n";
  r.text = os.str();
  return r;
}

CommandResult run_torus_orders() {
  CommandResult r;
  r.inputs = Json::object();
  const RootDatum d = ambient_datum();
  const WeylGroup g = enumerate_weyl(d);
  const IntPolynomial group_poly = group_order_poly(d);
  Json classes = Json::array();
  std::ostringstream os;
  for (const auto& cls : conjugacy_classes(g)) {
    const FactoredPoly factored = torus_order_factored(cls.representative);
    const IntPolynomial poly = factored.expand();
    Json j;
    j["class_size"] = cls.size;
    j["element_order"] = cls.representative.order();
    Json rep = Json::array();
    for (const auto& row : cls.representative.mx) {
      Json jr = Json::array();
      for (auto v : row) jr.push_back(v);
      rep.push_back(std::move(jr));
    }
    j["representative"] = std::move(rep);
    j["order_poly"] = poly_to_json(poly, factored.to_string());
    j["divides_group_order"] = group_poly.divide_exact(poly).has_value();
    classes.push_back(std::move(j));
    os << "class size " << cls.size << "  torus order " << factored.to_string() << "\n";
  }
  r.results["classes"] = std::move(classes);
  r.text = os.str();
  return r;
}

CommandResult run_levi(int index, bool weights, bool fusion, bool eigen) {
  CommandResult r;
  r.inputs["index"] = index;
  r.inputs["mode"] = weights ? "weights" : (fusion ? "fusion" : "eigen");
  (void)eigen;
  const RootDatum d = ambient_datum();
  std::ostringstream os;
  if (weights) {
    const WeightSystem ws = weight_system(d, index);
    r.results = weight_system_to_json(ws);
    os << "L" << index << " representation: dimension " << ws.dimension << ", highest weight "
       << vec_to_string(ws.highest_weight) << "\n";
    for (const auto& [w, m] : ws.weights)
      os << "  weight " << vec_to_string(w) << "  multiplicity " << m << "\n";
  } else {
    const FusionTable table = involution_fusion(d, index);
    if (fusion) {
      r.results = fusion_table_to_json(table);
      for (const auto& row : table.rows)
        os << "rep " << torus_point_text(row.representative) << "  orbit " << row.orbit_size
           << "  fused to " << to_string(row.g_class) << "  "
           << (row.in_derived ? "in" : "outside") << " L" << index << "'\n";
    } else {
      const WeightSystem ws = weight_system(d, index);
      Json rows = Json::array();
      for (const auto& row : table.rows) {
        const InvolutionEigenData e = eigen_dims(ws, row.representative);
        Json j;
        j["rep"] = torus_point_to_json(row.representative);
        j["orbit_size"] = row.orbit_size;
        j["g_class"] = to_string(row.g_class);
        j["in_derived"] = row.in_derived;
        j["dim_plus"] = e.dim_plus;
        j["dim_minus"] = e.dim_minus;
        rows.push_back(std::move(j));
        os << "rep " << torus_point_text(row.representative) << "  eigenspace dims (+"
           << e.dim_plus << ", -" << e.dim_minus << ")  fused to " << to_string(row.g_class)
           << "\n";
      }
      r.results["index"] = index;
      r.results["dimension"] = ws.dimension;
      r.results["rows"] = std::move(rows);
    }
  }
  r.text = os.str();
  return r;
}

CommandResult run_verify_parabolics(int which, const std::string& blocks_csv) {
  CommandResult r;
  r.inputs["case"] = which == 0 ? Json("all") : Json(which);
  std::vector<CaseConfig> configs = default_case_configs();
  if (!blocks_csv.empty()) {
    const auto parts = split_names(blocks_csv);
    if (parts.size() != configs.size())
      throw CLI::ValidationError("verify-parabolics", "--blocks needs four comma-separated values");
    for (std::size_t i = 0; i < parts.size(); ++i)
      configs[i].max_jordan_blocks = std::stoi(parts[i]);
    r.inputs["blocks"] = blocks_csv;
  }
  if (which != 0) {
    if (which < 1 || which > 4)
      throw CLI::ValidationError("verify-parabolics", "--case must be 1..4");
    configs = {configs[static_cast<std::size_t>(which - 1)]};
  }
  const RootDatum d = ambient_datum();
  const auto reports = verify_all(d, configs);
  bool all_hold = true;
  Json cases = Json::array();
  std::ostringstream os;
  for (const auto& rep : reports) {
    cases.push_back(case_report_to_json(rep));
    all_hold = all_hold && rep.contradiction_holds;
    os << "case P" << rep.levi_index << ": dim " << rep.dimension << ", blocks <= "
       << rep.max_jordan_blocks << ", admissible pairs " << rep.pairs.size();
    if (rep.vacuous)
      os << ", VACUOUS\n";
    else
      os << ", min margin " << rep.minimal_margin << " -> "
         << (rep.contradiction_holds ? "contradiction holds" : "NOT excluded") << "\n";
  }
  os << (all_hold ? "every case excludes the parabolic" : "some case FAILED") << "\n";
  r.results["cases"] = std::move(cases);
  r.results["all_hold"] = all_hold;
  r.text = os.str();
  r.exit_code = all_hold ? 0 : 1;
  return r;
}

CommandResult run_structconst(const std::string& group_path, const std::string& classes_csv,
                              const std::string& table_path, bool brute_force) {
  CommandResult r;
  r.inputs["group"] = group_path;
  r.inputs["classes"] = classes_csv;
  if (!table_path.empty()) r.inputs["table"] = table_path;
  r.inputs["brute_force"] = brute_force;

  const PermGroup group = perm_group_from_json(load_json_file(group_path));
  const ClassPartition part = conjugacy_classes_perm(group);
  const auto names = split_names(classes_csv);
  if (names.size() != 3)
    throw CLI::ValidationError("structconst", "--classes needs three comma-separated class names");
  const int c1 = part.index_of_name(names[0]);
  const int c2 = part.index_of_name(names[1]);
  const int c3 = part.index_of_name(names[2]);

  r.results["group"] = Json{{"degree", group.degree()}, {"order", group.order()}};
  r.results["classes"] = Json::array({names[0], names[1], names[2]});

  std::ostringstream os;
  os << "group of order " << group.order() << ", classes (" << classes_csv << ")\n";

  bool have_formula = false;
  Cyclotomic formula_value;
  if (!table_path.empty()) {
    const CharacterTable table = character_table_from_json(load_json_file(table_path));
    const TableValidation validation = validate_table(table);
    r.results["table_validation"] = validation_to_json(validation);
    if (!validation.valid) {
      os << "character table FAILED validation\n";
      for (const auto& v : validation.violations) os << "  " << v << "\n";
      r.text = os.str();
      r.exit_code = 1;
      return r;
    }
    if (const auto mismatch = table_class_mismatch(table, part)) {
      r.results["table_mismatch"] = *mismatch;
      os << "character table does not match the group: " << *mismatch << "\n";
      r.text = os.str();
      r.exit_code = 1;
      return r;
    }
    formula_value = structure_constant(table, c1, c2, c3);
    have_formula = true;
    r.results["structure_constant"] = cyclotomic_value_json(formula_value);
    os << "structure constant (character formula): " << formula_value.to_string() << "\n";
  }

  if (brute_force || !have_formula) {
    const long long count = count_triples(group, part, c1, c2, c3);
    const Rat normalized = Rat(count) / Rat(static_cast<long long>(group.order()));
    r.results["brute_force_count"] = count;
    r.results["normalized_count"] = frac_string(normalized);
    os << "brute-force triple count: " << count << " (normalized " << frac_string(normalized)
       << ")\n";
    if (have_formula) {
      const bool consistent = formula_value == Cyclotomic(normalized);
      r.results["consistent"] = consistent;
      os << (consistent ? "formula and brute force agree exactly"
                        : "MISMATCH between formula and brute force")
         << "\n";
      if (!consistent) r.exit_code = 1;
    }
  }
  r.text = os.str();
  return r;
}

CommandResult run_rigidity(const std::string& group_path, const std::string& classes_csv) {
  CommandResult r;
  r.inputs["group"] = group_path;
  r.inputs["classes"] = classes_csv;
  const PermGroup group = perm_group_from_json(load_json_file(group_path));
  const ClassPartition part = conjugacy_classes_perm(group);
  const auto names = split_names(classes_csv);
  if (names.size() != 3)
    throw CLI::ValidationError("rigidity", "--classes needs three comma-separated class names");
  const RigidityReport report =
      is_rigid(group, part, part.index_of_name(names[0]), part.index_of_name(names[1]),
               part.index_of_name(names[2]));
  r.results["group"] = Json{{"degree", group.degree()}, {"order", group.order()}};
  r.results["classes"] = Json::array({names[0], names[1], names[2]});
  const Json report_json = rigidity_report_to_json(report);
  for (const auto& [key, value] : report_json.items()) r.results[key] = value;
  std::ostringstream os;
  os << "triples " << report.triple_count << ", generating " << report.generating_count
     << ", orbits " << report.orbit_count << "\n"
     << "rigid: " << (report.rigid ? "yes" : "no")
     << ", rationally rigid: " << (report.rationally_rigid ? "yes" : "no") << "\n";
  r.text = os.str();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact root-datum, Weyl-orbit, torus-involution and class-structure-constant "
               "computations"};
  app.require_subcommand(1);
  app.fallthrough();
  bool text = false;
  bool timing = false;
  app.add_flag("--text", text, "human-readable output instead of JSON");
  app.add_flag("--json", "canonical JSON output (the default)");
  app.add_flag("--timing", timing, "include elapsed milliseconds in the report");

  auto* dump = app.add_subcommand("dump-datum", "serialize the root datum (full or a levi)");
  int dump_levi = 0;
  dump->add_option("--levi", dump_levi, "levi index 1..4 (default: the full datum)")
      ->check(CLI::Range(1, 4));

  app.add_subcommand("involutions", "the nontrivial involution classes of the torus");

  auto* semi = app.add_subcommand("semisimple", "torsion-point classes at a fixed order");
  int torsion = 2;
  int characteristic = 0;
  semi->add_option("--torsion", torsion, "torsion order n")->required();
  semi->add_option("--characteristic", characteristic,
                   "field characteristic (default: generic p > 3)");

  app.add_subcommand("torus-orders", "torus order polynomials per Weyl class");
  app.add_subcommand("order-poly", "the group order polynomial");

  auto* levi = app.add_subcommand("levi", "levi weight systems, fusion and eigen tables");
  int levi_index = 1;
  bool levi_weights = false, levi_fusion = false, levi_eigen = false;
  levi->add_option("--index", levi_index, "levi index 1..4")->required()->check(CLI::Range(1, 4));
  levi->add_flag("--weights", levi_weights, "weight system of the case representation");
  levi->add_flag("--fusion", levi_fusion, "fusion of involution classes into the ambient group");
  levi->add_flag("--eigen", levi_eigen, "eigenspace dimensions per involution class");

  auto* verify = app.add_subcommand("verify-parabolics", "eigenvalue contradiction per parabolic");
  int verify_case_index = 0;
  std::string blocks_csv;
  verify->add_option("--case", verify_case_index, "single case 1..4 (default: all)");
  verify->add_option("--blocks", blocks_csv,
                     "override the four Jordan-block budgets, e.g. 1,1,1,2");

  auto* sc = app.add_subcommand("structconst", "class structure constant of a permutation group");
  std::string group_path, classes_csv, table_path;
  bool brute = false;
  sc->add_option("--group", group_path, "permutation group JSON file")->required();
  sc->add_option("--classes", classes_csv, "three class names, e.g. 2a,3a,5a")->required();
  sc->add_option("--table", table_path, "character table JSON file");
  sc->add_flag("--brute-force", brute, "count triples directly (implied without --table)");

  auto* rig = app.add_subcommand("rigidity", "rigidity of a class triple by full enumeration");
  std::string rig_group, rig_classes;
  rig->add_option("--group", rig_group, "permutation group JSON file")->required();
  rig->add_option("--classes", rig_classes, "three class names")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  std::string command;
  try {
    if (app.got_subcommand("dump-datum")) {
      command = "dump-datum";
      result = run_dump_datum(dump_levi);
    } else if (app.got_subcommand("involutions")) {
      command = "involutions";
      result = run_involutions();
    } else if (app.got_subcommand("semisimple")) {
      command = "semisimple";
      result = run_semisimple(torsion, characteristic);
    } else if (app.got_subcommand("torus-orders")) {
      command = "torus-orders";
      result = run_torus_orders();
    } else if (app.got_subcommand("order-poly")) {
      command = "order-poly";
      result = run_order_poly();
    } else if (app.got_subcommand("levi")) {
      command = "levi";
      if (static_cast<int>(levi_weights) + static_cast<int>(levi_fusion) +
              static_cast<int>(levi_eigen) !=
          1)
        throw CLI::ValidationError("levi", "pass exactly one of --weights, --fusion, --eigen");
      result = run_levi(levi_index, levi_weights, levi_fusion, levi_eigen);
    } else if (app.got_subcommand("verify-parabolics")) {
      command = "verify-parabolics";
      result = run_verify_parabolics(verify_case_index, blocks_csv);
    } else if (app.got_subcommand("structconst")) {
      command = "structconst";
      result = run_structconst(group_path, classes_csv, table_path, brute);
    } else if (app.got_subcommand("rigidity")) {
      command = "rigidity";
      result = run_rigidity(rig_group, rig_classes);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  if (text) {
    std::cout << result.text;
    if (timing) std::cerr << "elapsed " << elapsed.count() << " ms\n";
  } else {
    Json report;
    report["command"] = command;
    report["inputs"] = std::move(result.inputs);
    report["results"] = std::move(result.results);
    if (timing) report["elapsed_ms"] = elapsed.count();
    report["version"] = kVersion;
    std::cout << report.dump(2) << "\n";
  }
  return result.exit_code;
}
