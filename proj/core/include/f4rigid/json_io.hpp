#pragma once

#include "f4rigid/chartable.hpp"
#include "f4rigid/cyclotomic.hpp"
#include "f4rigid/levirep.hpp"
#include "f4rigid/permgroup.hpp"
#include "f4rigid/qpoly.hpp"
#include "f4rigid/rigidity.hpp"
#include "f4rigid/rootdata.hpp"
#include "f4rigid/torus.hpp"
#include "f4rigid/verifier.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace f4rigid {

/// Key order is preserved, so serialized payloads are byte-stable.
using Json = nlohmann::ordered_json;

Json datum_to_json(const RootDatum& datum);
Json poly_to_json(const IntPolynomial& p, const std::string& factored = "");
Json torus_point_to_json(const TorusPoint& t);
Json semisimple_class_to_json(const SemisimpleClass& c);
Json weight_system_to_json(const WeightSystem& ws);
Json fusion_table_to_json(const FusionTable& table);
Json eigen_data_to_json(const InvolutionEigenData& e);
Json case_report_to_json(const CaseReport& report);
Json class_partition_to_json(const ClassPartition& part);
Json rigidity_report_to_json(const RigidityReport& report);
Json validation_to_json(const TableValidation& v);
Json cyclotomic_to_json(const Cyclotomic& value);

Cyclotomic cyclotomic_from_json(const Json& j);

/// {"degree": n, "generators": [[1-based images] ...]}
PermGroup perm_group_from_json(const Json& j);
Json perm_group_to_json(const PermGroup& g);

/// {"order": N, "classes": [{"name","size","element_order"} ...],
///  "chars": [[cyclotomic ...] ...]}
CharacterTable character_table_from_json(const Json& j);
Json character_table_to_json(const CharacterTable& t);

Json load_json_file(const std::string& path);  // throws std::runtime_error

}  // namespace f4rigid
