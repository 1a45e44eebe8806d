#pragma once

#include "f4rigid/rootdata.hpp"
#include "f4rigid/torus.hpp"

#include <string>
#include <utility>
#include <vector>

namespace f4rigid {

/// Weight multiset of one of the four distinguished Levi representations.
struct WeightSystem {
  int levi_index = 0;
  IVec highest_weight;
  std::vector<std::pair<IVec, int>> weights;  // (weight, multiplicity), sorted
  int dimension = 0;
};

/// Configured representations: highest weight (0,0,0,1) for L1 and (1,0,0,0)
/// for L2..L4; weights are the W_{L_i}-orbit, plus the zero weight for L4.
/// Dimensions come out as 6, 2, 3, 7.
WeightSystem weight_system(const RootDatum& f4, int levi_index);

struct InvolutionEigenData {
  int dim_plus = 0;   // 1-eigenspace
  int dim_minus = 0;  // (-1)-eigenspace
  bool operator==(const InvolutionEigenData&) const = default;
};

/// Eigenspace dimensions of an involution t on the weight system: weights
/// evaluating to 0 count into dim_plus, to 1/2 into dim_minus.
InvolutionEigenData eigen_dims(const WeightSystem& ws, const TorusPoint& t);

enum class GClass { x, y_s, other };
std::string to_string(GClass c);

struct FusionRow {
  TorusPoint representative;  // lexicographically least orbit member
  std::size_t orbit_size = 0;
  GClass g_class = GClass::other;
  bool in_derived = false;  // t_i = 0
};

/// Every nontrivial W_{L_i}-orbit on the 2-torsion points, labeled by the
/// ambient W-orbit it fuses into and by derived-subgroup membership.
struct FusionTable {
  int levi_index = 0;
  std::vector<FusionRow> rows;
};

FusionTable involution_fusion(const RootDatum& f4, int levi_index);

}  // namespace f4rigid
