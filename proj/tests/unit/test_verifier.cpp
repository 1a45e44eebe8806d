#include "doctest.h"

#include "support/soundness.hpp"

#include <f4rigid/verifier.hpp>

using namespace f4rigid;

namespace {

RootDatum f4() {
  static const RootDatum d = generate_roots(
      build_root_datum({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}, "F4"));
  return d;
}

}  // namespace

TEST_SUITE("verifier") {

TEST_CASE("two involution bound") {
  CHECK(two_involution_bound({0, 6}, {2, 4}, 6) == 2);
  CHECK(two_involution_bound({4, 2}, {2, 4}, 6) == 2);
  CHECK(two_involution_bound({3, 3}, {3, 3}, 6) == 0);
  // first involution is the identity: the product is the second involution
  for (int n : {2, 3, 6, 7})
    for (int p = 0; p <= n; ++p) CHECK(two_involution_bound({n, 0}, {p, n - p}, n) == n - p);
  CHECK_THROWS_AS(two_involution_bound({1, 2}, {2, 2}, 4), std::invalid_argument);
  CHECK_THROWS_AS(two_involution_bound({-1, 5}, {2, 2}, 4), std::invalid_argument);
}

TEST_CASE("default configs carry the jordan block budget 1,1,1,2") {
  const auto configs = default_case_configs();
  REQUIRE(configs.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(configs[i].levi_index == i + 1);
  CHECK(configs[0].max_jordan_blocks == 1);
  CHECK(configs[1].max_jordan_blocks == 1);
  CHECK(configs[2].max_jordan_blocks == 1);
  CHECK(configs[3].max_jordan_blocks == 2);
}

TEST_CASE("case P1: two admissible pairs, bound 2, margin exactly 1") {
  const CaseReport r = verify_case(f4(), {1, 1});
  CHECK(r.dimension == 6);
  CHECK(!r.vacuous);
  CHECK(r.contradiction_holds);
  REQUIRE(r.pairs.size() == 2);
  for (const auto& p : r.pairs) {
    CHECK(p.bound == 2);
    CHECK(p.margin == 1);
    CHECK(p.ys_eigen == InvolutionEigenData{2, 4});
  }
  CHECK(r.minimal_margin == 1);
}

TEST_CASE("case P2: the two x-candidates act as -1 on the 2-dimensional space") {
  const CaseReport r = verify_case(f4(), {2, 1});
  CHECK(r.dimension == 2);
  CHECK(r.contradiction_holds);
  REQUIRE(r.pairs.size() == 2);
  for (const auto& p : r.pairs) {
    CHECK(p.x_eigen == InvolutionEigenData{0, 2});
    CHECK(p.ys_eigen == InvolutionEigenData{2, 0});
    CHECK(p.bound == 2);
    CHECK(p.margin == 1);
  }
}

TEST_CASE("case P3: three admissible pairs including the pair outside L3'") {
  const CaseReport r = verify_case(f4(), {3, 1});
  CHECK(r.dimension == 3);
  CHECK(r.contradiction_holds);
  REQUIRE(r.pairs.size() == 3);
  for (const auto& p : r.pairs) {
    CHECK(p.x_eigen == InvolutionEigenData{1, 2});
    CHECK(p.ys_eigen == InvolutionEigenData{3, 0});
    CHECK(p.margin == 1);
  }
}

TEST_CASE("case P4: margin 2 with the two-block discount") {
  const CaseReport r = verify_case(f4(), {4, 2});
  CHECK(r.dimension == 7);
  CHECK(r.contradiction_holds);
  REQUIRE(r.pairs.size() == 2);
  for (const auto& p : r.pairs) {
    CHECK(p.x_eigen == InvolutionEigenData{3, 4});
    CHECK(p.ys_eigen == InvolutionEigenData{7, 0});
    CHECK(p.bound == 4);
    CHECK(p.margin == 2);
  }
  CHECK(r.minimal_margin == 2);
}

TEST_CASE("verify_all holds on all four cases") {
  const auto reports = verify_all(f4());
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    CHECK(!r.vacuous);
    CHECK(r.contradiction_holds);
    CHECK(r.minimal_margin >= 1);
  }
  CHECK(reports[0].minimal_margin == 1);
}

TEST_CASE("sanity inversion: an inflated block budget breaks P1") {
  const CaseReport r = verify_case(f4(), {1, 3});
  CHECK(!r.contradiction_holds);
  CHECK(r.minimal_margin == 2 - 3);
}

TEST_CASE("margins decrease one-for-one in the block budget") {
  for (int i = 1; i <= 4; ++i) {
    const CaseReport a = verify_case(f4(), {i, 0});
    const CaseReport b = verify_case(f4(), {i, 1});
    CHECK(a.minimal_margin == b.minimal_margin + 1);
  }
}

TEST_CASE("a vacuous admissible set is flagged, not reported as a contradiction") {
  const WeightSystem ws = weight_system(f4(), 1);
  FusionTable fusion = involution_fusion(f4(), 1);
  // drop the y_s rows: no pair can be formed
  FusionTable doctored;
  doctored.levi_index = fusion.levi_index;
  for (const auto& row : fusion.rows)
    if (row.g_class != GClass::y_s) doctored.rows.push_back(row);
  const CaseReport r = examine_pairs(ws, doctored, {1, 1});
  CHECK(r.vacuous);
  CHECK(!r.contradiction_holds);
  CHECK(r.pairs.empty());
}

TEST_CASE("parity admissibility prunes cross-coset pairs") {
  // in case P1 the class outside L1' pairs with nothing
  const CaseReport r = verify_case(f4(), {1, 1});
  const Rat half(1, 2);
  for (const auto& p : r.pairs) {
    CHECK(p.x_rep.coords[0] == p.ys_rep.coords[0]);
    CHECK(p.x_rep.coords[0] != half);
  }
}

TEST_CASE("bound soundness on random exact involution products") {
  CHECK(testsupport::soundness_violations(6, 1, 120, 0x5eed0001) == 0);
  CHECK(testsupport::soundness_violations(2, 1, 120, 0x5eed0002) == 0);
  CHECK(testsupport::soundness_violations(3, 1, 120, 0x5eed0003) == 0);
  CHECK(testsupport::soundness_violations(7, 2, 120, 0x5eed0004) == 0);
}

}  // TEST_SUITE
