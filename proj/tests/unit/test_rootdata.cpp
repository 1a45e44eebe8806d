#include "doctest.h"

#include "support/closure_oracle.hpp"

#include <f4rigid/rootdata.hpp>

#include <set>
#include <string>

using namespace f4rigid;

namespace {

const IMat kF4Cartan{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};

RootDatum f4() {
  static const RootDatum d = generate_roots(build_root_datum(kF4Cartan, "F4"));
  return d;
}

// Independent root closure: reflect (root, coroot) pairs in shuffled order.
std::set<std::pair<IVec, IVec>> oracle_root_set(const RootDatum& datum, unsigned seed) {
  using Pair = std::pair<IVec, IVec>;
  std::vector<Pair> seeds;
  for (int k = 0; k < datum.node_count(); ++k)
    seeds.emplace_back(datum.simple_roots[k], datum.simple_coroots[k]);
  std::vector<int> gen_ids(datum.node_count());
  for (int k = 0; k < datum.node_count(); ++k) gen_ids[k] = k;
  auto apply = [&datum](const Pair& p, int k) {
    const std::int64_t cx = pairing(p.first, datum.simple_coroots[k]);
    const std::int64_t cy = pairing(datum.simple_roots[k], p.second);
    return Pair{vec_sub(p.first, vec_scale(datum.simple_roots[k], cx)),
                vec_sub(p.second, vec_scale(datum.simple_coroots[k], cy))};
  };
  return closure_oracle(seeds, gen_ids, apply, seed);
}

// Shuffled-order closure reproduces the library's canonical pair list exactly.
bool oracle_agrees(const RootDatum& datum, unsigned seed) {
  const auto oracle = oracle_root_set(datum, seed);
  if (oracle.size() != datum.roots.size()) return false;
  for (const auto& p : datum.roots)
    if (!oracle.count({p.root, p.coroot})) return false;
  return true;
}

}  // namespace

TEST_SUITE("rootdata") {

TEST_CASE("cartan axioms are enforced with a diagnostic naming the entry") {
  CHECK_THROWS_AS(build_root_datum({{3}}, "bad"), std::invalid_argument);
  try {
    build_root_datum({{2, -1}, {-1, 3}}, "bad");
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("cartan[2][2]") != std::string::npos);
  }
  CHECK_THROWS_AS(build_root_datum({{2, 1}, {1, 2}}, "bad"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum({{2, -1}, {0, 2}}, "bad"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum({{2, -1}, {-1, 2, 0}}, "bad"), std::invalid_argument);
}

TEST_CASE("F4 datum: simple roots are the cartan rows, coroots the standard basis") {
  const RootDatum d = build_root_datum(kF4Cartan, "F4");
  CHECK(d.rank == 4);
  CHECK(d.label == "F4");
  for (int i = 0; i < 4; ++i) {
    CHECK(d.simple_roots[i] == kF4Cartan[i]);
    CHECK(pairing(d.simple_roots[i], d.simple_coroots[i]) == 2);
  }
  CHECK(pairing(d.simple_roots[0], d.simple_coroots[1]) == -1);  // <alpha_1, alpha_2^vee>
  CHECK(pairing(d.simple_roots[1], d.simple_coroots[2]) == -2);  // long against short coroot
}

TEST_CASE("rank-1 datum") {
  RootDatum a1 = generate_roots(build_root_datum({{2}}, "A1"));
  CHECK(a1.simple_roots[0] == IVec{2});
  CHECK(a1.simple_coroots[0] == IVec{1});
  REQUIRE(a1.roots.size() == 2);
  CHECK(a1.roots[0].root == IVec{-2});
  CHECK(a1.roots[1].root == IVec{2});
}

TEST_CASE("pairing") {
  CHECK(pairing({1, 0, 0, 0}, {0, 1, 0, 0}) == 0);
  CHECK(pairing({1, 0}, {1, 0}) == 1);  // dual bases
  CHECK(pairing({0, 0, 0, 0}, {5, 6, 7, 8}) == 0);
  CHECK(pairing({2, -1, 0, 0}, {0, 1, 0, 0}) == -1);
  CHECK_THROWS_AS(pairing({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("F4 has 48 roots, 24 positive, closed under negation and reflections") {
  const RootDatum d = f4();
  REQUIRE(d.roots.size() == 48);
  CHECK(d.positive_count() == 24);
  for (unsigned seed : {1u, 2u, 3u}) CHECK(oracle_agrees(d, seed));

  std::set<IVec> roots;
  for (const auto& p : d.roots) roots.insert(p.root);
  for (const auto& p : d.roots) {
    CHECK(pairing(p.root, p.coroot) == 2);
    CHECK(roots.count(vec_neg(p.root)) == 1);
    // reflection in this root permutes the root set
    for (const auto& q : d.roots) {
      const IVec image = vec_sub(q.root, vec_scale(p.root, pairing(q.root, p.coroot)));
      CHECK(roots.count(image) == 1);
    }
  }
}

TEST_CASE("generate_roots is idempotent") {
  const RootDatum d = f4();
  const RootDatum again = generate_roots(d);
  CHECK(again.roots.size() == d.roots.size());
  for (std::size_t i = 0; i < d.roots.size(); ++i)
    CHECK(again.roots[i].root == d.roots[i].root);
}

TEST_CASE("levi data keep the ambient rank and have the expected types and sizes") {
  const RootDatum d = f4();
  const struct {
    int node;
    std::string type;
    std::size_t root_count;
  } expected[] = {
      {1, "C3", 18}, {2, "A2+A1", 8}, {3, "A2+A1", 8}, {4, "B3", 18}};
  for (const auto& e : expected) {
    RootDatum sub = generate_roots(levi_datum(d, e.node));
    CHECK(sub.label == "L" + std::to_string(e.node));
    CHECK(sub.rank == 4);
    CHECK(sub.node_count() == 3);
    CHECK(sub.roots.size() == e.root_count);
    for (unsigned seed : {7u, 11u}) CHECK(oracle_agrees(sub, seed));
    CHECK(classify_subsystem(sub, sub.roots).to_string() == e.type);
  }
  CHECK_THROWS_AS(levi_datum(d, 5), std::out_of_range);
  CHECK_THROWS_AS(levi_datum(d, 0), std::out_of_range);
}

TEST_CASE("classify_subsystem reproduces the label of full catalogue systems") {
  for (const char* name : {"A1", "A2", "B3", "C3", "F4", "B4", "D4", "G2"}) {
    RootDatum d = generate_roots(catalogue_datum(SubsystemType::parse(name)));
    CHECK(classify_subsystem(d, d.roots).to_string() == name);
  }
}

TEST_CASE("classify_subsystem on levi root subsets of the ambient datum") {
  const RootDatum d = f4();
  // roots supported away from node 1 (simple coefficient 0 there) form the L1 system
  auto subset_without_node = [&d](int pos) {
    std::vector<RootPair> out;
    for (const auto& p : d.roots)
      if (p.simple_coeffs[pos] == 0) out.push_back(p);
    return out;
  };
  CHECK(classify_subsystem(d, subset_without_node(0)).to_string() == "C3");
  CHECK(classify_subsystem(d, subset_without_node(1)).to_string() == "A2+A1");
  CHECK(classify_subsystem(d, subset_without_node(3)).to_string() == "B3");
}

TEST_CASE("classify_subsystem rejects bad subsets") {
  const RootDatum d = f4();
  std::vector<RootPair> half{d.roots[0]};  // single root, not negation-closed
  CHECK_THROWS_AS(classify_subsystem(d, half), std::invalid_argument);
  CHECK(classify_subsystem(d, {}).to_string() == "1");
}

TEST_CASE("subsystem type rendering is canonical and order-independent") {
  SubsystemType t;
  t.components = {{'C', 3}, {'A', 1}};
  t.canonicalize();
  CHECK(t.to_string() == "A1+C3");
  SubsystemType u;
  u.components = {{'A', 1}, {'A', 2}};
  u.canonicalize();
  CHECK(u.to_string() == "A2+A1");
  CHECK(SubsystemType::parse("A1+C3") == t);
  CHECK(SubsystemType::parse("C3+A1") == t);
  CHECK(t.total_rank() == 4);
}

}  // TEST_SUITE
