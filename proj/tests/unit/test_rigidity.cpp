#include "doctest.h"

#include <f4rigid/permgroup.hpp>
#include <f4rigid/rigidity.hpp>

#include <algorithm>
#include <random>

using namespace f4rigid;

namespace {

PermGroup s3() { return PermGroup(3, {{1, 0, 2}, {1, 2, 0}}); }
PermGroup a4() { return PermGroup(4, {{1, 0, 3, 2}, {1, 2, 0, 3}}); }
PermGroup s4() { return PermGroup(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}); }
PermGroup a5() { return PermGroup(5, {{1, 2, 0, 3, 4}, {0, 1, 3, 4, 2}}); }

RigidityReport run(const PermGroup& g, const char* a, const char* b, const char* c) {
  const ClassPartition p = conjugacy_classes_perm(g);
  return is_rigid(g, p, p.index_of_name(a), p.index_of_name(b), p.index_of_name(c));
}

}  // namespace

TEST_SUITE("rigidity") {

TEST_CASE("S3 with (2a,2a,3a) is rationally rigid: 6 triples, one regular orbit") {
  const RigidityReport r = run(s3(), "2a", "2a", "3a");
  CHECK(r.triple_count == 6);
  CHECK(r.generating_count == 6);
  CHECK(r.orbit_count == 1);
  CHECK(r.regular);
  CHECK(r.rigid);
  CHECK(r.center_trivial);
  CHECK(r.classes_rational == std::array<bool, 3>{true, true, true});
  CHECK(r.rationally_rigid);
}

TEST_CASE("an empty triple set is not rigid") {
  const RigidityReport r = run(s3(), "2a", "2a", "2a");
  CHECK(r.triple_count == 0);
  CHECK(r.generating_count == 0);
  CHECK(r.orbit_count == 0);
  CHECK(!r.regular);
  CHECK(!r.rigid);
}

TEST_CASE("triples that only generate a proper subgroup do not count") {
  // in A4 two distinct double transpositions multiply to the third,
  // but they only generate the Klein subgroup
  const RigidityReport r = run(a4(), "2a", "2a", "2a");
  CHECK(r.triple_count == 6);
  CHECK(r.generating_count == 0);
  CHECK(r.orbit_count == 0);
  CHECK(!r.rigid);
}

TEST_CASE("frozen verdict: S4 with (2a,3a,4a)") {
  const RigidityReport r = run(s4(), "2a", "3a", "4a");
  CHECK(r.triple_count == 24);
  CHECK(r.generating_count == 24);
  CHECK(r.orbit_count == 1);
  CHECK(r.rigid);
  CHECK(r.rationally_rigid);
}

TEST_CASE("frozen verdict: A5 with (2a,3a,5a) is rigid but not rationally rigid") {
  const RigidityReport r = run(a5(), "2a", "3a", "5a");
  CHECK(r.triple_count == 60);
  CHECK(r.generating_count == 60);
  CHECK(r.orbit_count == 1);
  CHECK(r.rigid);
  CHECK(r.center_trivial);
  CHECK(!r.classes_rational[2]);  // 5a is not rational in A5
  CHECK(!r.rationally_rigid);
}

TEST_CASE("reports are invariant under relabeling the points") {
  std::mt19937 rng(12);
  const PermGroup g = a5();
  const ClassPartition p = conjugacy_classes_perm(g);
  const RigidityReport base = is_rigid(g, p, p.index_of_name("2a"), p.index_of_name("3a"),
                                       p.index_of_name("5a"));
  for (int trial = 0; trial < 3; ++trial) {
    Perm sigma = perm_identity(5);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::vector<Perm> gens;
    for (const auto& gen : g.generators()) gens.push_back(perm_conjugate(gen, sigma));
    const PermGroup h(5, gens);
    const ClassPartition q = conjugacy_classes_perm(h);
    const RigidityReport r = is_rigid(h, q, q.index_of_name("2a"), q.index_of_name("3a"),
                                      q.index_of_name("5a"));
    CHECK(r.triple_count == base.triple_count);
    CHECK(r.generating_count == base.generating_count);
    CHECK(r.orbit_count == base.orbit_count);
    CHECK(r.regular == base.regular);
    CHECK(r.rigid == base.rigid);
    CHECK(r.center_trivial == base.center_trivial);
    CHECK(r.rationally_rigid == base.rationally_rigid);
  }
}

}  // TEST_SUITE
