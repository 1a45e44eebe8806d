#include "f4rigid/verifier.hpp"

#include "f4rigid/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace f4rigid {

std::vector<CaseConfig> default_case_configs() {
  return {{1, 1}, {2, 1}, {3, 1}, {4, 2}};
}

int two_involution_bound(const InvolutionEigenData& a, const InvolutionEigenData& b,
                         int dimension) {
  if (a.dim_plus < 0 || a.dim_minus < 0 || b.dim_plus < 0 || b.dim_minus < 0)
    throw std::invalid_argument("negative eigenspace dimension");
  if (a.dim_plus + a.dim_minus != dimension || b.dim_plus + b.dim_minus != dimension)
    throw std::invalid_argument("eigenspace dimensions do not sum to the space dimension");
  const int fixed_negated = a.dim_plus + b.dim_minus - dimension;
  const int negated_fixed = a.dim_minus + b.dim_plus - dimension;
  return std::max({fixed_negated, negated_fixed, 0});
}

CaseReport examine_pairs(const WeightSystem& ws, const FusionTable& fusion,
                         const CaseConfig& config) {
  if (ws.levi_index != config.levi_index || fusion.levi_index != config.levi_index)
    throw std::invalid_argument("weight system / fusion table / config index mismatch");
  CaseReport report;
  report.levi_index = config.levi_index;
  report.dimension = ws.dimension;
  report.max_jordan_blocks = config.max_jordan_blocks;

  const int i = config.levi_index;
  for (const auto& xr : fusion.rows) {
    if (xr.g_class != GClass::x) continue;
    for (const auto& yr : fusion.rows) {
      if (yr.g_class != GClass::y_s) continue;
      // the image of the product in L/L' ~ t_i must vanish
      const Rat sum = mod1(xr.representative.coords[i - 1] + yr.representative.coords[i - 1]);
      if (sum != 0) continue;
      PairExam exam;
      exam.x_rep = xr.representative;
      exam.ys_rep = yr.representative;
      exam.x_eigen = eigen_dims(ws, xr.representative);
      exam.ys_eigen = eigen_dims(ws, yr.representative);
      exam.bound = two_involution_bound(exam.x_eigen, exam.ys_eigen, ws.dimension);
      exam.margin = exam.bound - config.max_jordan_blocks;
      report.pairs.push_back(std::move(exam));
    }
  }

  report.vacuous = report.pairs.empty();
  if (!report.vacuous) {
    report.minimal_margin = report.pairs.front().margin;
    for (const auto& p : report.pairs)
      report.minimal_margin = std::min(report.minimal_margin, p.margin);
    report.contradiction_holds = report.minimal_margin > 0;
  } else {
    report.minimal_margin = 0;
    report.contradiction_holds = false;  // an empty admissible set certifies nothing
  }
  return report;
}

CaseReport verify_case(const RootDatum& f4, const CaseConfig& config) {
  const WeightSystem ws = weight_system(f4, config.levi_index);
  const FusionTable fusion = involution_fusion(f4, config.levi_index);
  return examine_pairs(ws, fusion, config);
}

std::vector<CaseReport> verify_all(const RootDatum& f4) {
  return verify_all(f4, default_case_configs());
}

std::vector<CaseReport> verify_all(const RootDatum& f4, const std::vector<CaseConfig>& configs) {
  std::vector<CaseReport> out;
  out.reserve(configs.size());
  for (const auto& c : configs) out.push_back(verify_case(f4, c));
  return out;
}

}  // namespace f4rigid
