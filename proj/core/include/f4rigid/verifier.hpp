#pragma once

#include "f4rigid/levirep.hpp"
#include "f4rigid/rootdata.hpp"

#include <vector>

namespace f4rigid {

struct CaseConfig {
  int levi_index = 0;
  /// Maximum number of nontrivial (size-2) Jordan blocks of the unipotent
  /// factor's image in the case representation.
  int max_jordan_blocks = 0;
};

/// b = 1, 1, 1, 2 for the four maximal parabolic cases.
std::vector<CaseConfig> default_case_configs();

/// Certified lower bound for the (-1)-eigenspace dimension of a product of
/// two involutions with the given eigenspace dimensions on an n-dimensional
/// space: a vector fixed by one and negated by the other is negated by the
/// product, so the bound is max(a+ + b- - n, a- + b+ - n, 0).
int two_involution_bound(const InvolutionEigenData& a, const InvolutionEigenData& b,
                         int dimension);

struct PairExam {
  TorusPoint x_rep;
  TorusPoint ys_rep;
  InvolutionEigenData x_eigen;
  InvolutionEigenData ys_eigen;
  int bound = 0;
  int margin = 0;  // bound - max_jordan_blocks
};

struct CaseReport {
  int levi_index = 0;
  int dimension = 0;
  int max_jordan_blocks = 0;
  std::vector<PairExam> pairs;  // all admissible (x-class, y_s-class) pairs
  bool vacuous = true;
  int minimal_margin = 0;  // meaningful only when not vacuous
  bool contradiction_holds = false;
};

/// Enumerates the admissible pairs of a fusion table against a weight system.
/// Admissible = one class fused to x and one fused to y_s whose i-th torus
/// coordinates sum to 0 mod 1 (the product must die in L/L' since it equals a
/// product of unipotent images). Never reports a contradiction on an empty
/// pair set.
CaseReport examine_pairs(const WeightSystem& ws, const FusionTable& fusion,
                         const CaseConfig& config);

CaseReport verify_case(const RootDatum& f4, const CaseConfig& config);

std::vector<CaseReport> verify_all(const RootDatum& f4);
std::vector<CaseReport> verify_all(const RootDatum& f4, const std::vector<CaseConfig>& configs);

}  // namespace f4rigid
