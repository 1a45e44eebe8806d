#include "doctest.h"

#include <f4rigid/torus.hpp>

#include <random>

using namespace f4rigid;

namespace {

RootDatum f4() {
  static const RootDatum d = generate_roots(
      build_root_datum({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}, "F4"));
  return d;
}

TorusPoint tp(std::vector<Rat> v) { return make_torus_point(std::move(v)); }

const Rat kHalf(1, 2);

}  // namespace

TEST_SUITE("torus") {

TEST_CASE("normalization and order") {
  const TorusPoint t = tp({Rat(3, 2), Rat(-1, 3), Rat(7), Rat(0)});
  CHECK(t.coords == std::vector<Rat>{kHalf, Rat(2, 3), Rat(0), Rat(0)});
  CHECK(t.order() == 6);
  CHECK(TorusPoint::zero(4).order() == 1);
  CHECK(TorusPoint::zero(4).is_zero());
}

TEST_CASE("torsion point counts and canonical order") {
  const RootDatum d = f4();
  CHECK(torsion_points(d, 1).size() == 1);
  const auto t2 = torsion_points(d, 2);
  CHECK(t2.size() == 16);
  CHECK(std::is_sorted(t2.begin(), t2.end()));
  CHECK(t2.front().is_zero());
  CHECK(torsion_points(d, 3).size() == 81);
  CHECK_THROWS_AS(torsion_points(d, 0), std::invalid_argument);
  CHECK_THROWS_AS(torsion_points(d, 100), std::runtime_error);  // 10^8 points
}

TEST_CASE("evaluation") {
  const RootDatum d = f4();
  const TorusPoint zero = TorusPoint::zero(4);
  for (const auto& p : d.roots) CHECK(evaluate(zero, p.root) == 0);
  // 2-torsion points only evaluate to 0 or 1/2 on integral weights
  for (const auto& t : torsion_points(d, 2))
    for (const auto& p : d.roots) {
      const Rat v = evaluate(t, p.root);
      CHECK((v == 0 || v == kHalf));
    }
  CHECK_THROWS_AS(evaluate(tp({Rat(0)}), IVec{1, 0}), std::invalid_argument);
}

TEST_CASE("evaluation is additive in the weight") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::int64_t> entry(-6, 6);
  std::uniform_int_distribution<int> num(0, 11);
  for (int k = 0; k < 200; ++k) {
    std::vector<Rat> coords;
    for (int i = 0; i < 4; ++i) coords.emplace_back(num(rng), 12);
    const TorusPoint t = tp(std::move(coords));
    IVec x(4), y(4);
    for (auto& v : x) v = entry(rng);
    for (auto& v : y) v = entry(rng);
    CHECK(evaluate(t, vec_add(x, y)) == mod1(evaluate(t, x) + evaluate(t, y)));
  }
}

TEST_CASE("involution classes of the rank-4 datum") {
  const RootDatum d = f4();
  const auto classes = semisimple_classes(d, 2);
  REQUIRE(classes.size() == 3);

  CHECK(classes[0].representative.is_zero());
  CHECK(classes[0].orbit_size == 1);
  CHECK(classes[0].centralizer.to_string() == "F4");

  CHECK(classes[1].representative == tp({Rat(0), Rat(0), Rat(0), kHalf}));
  CHECK(classes[1].orbit_size == 3);
  CHECK(classes[1].centralizer.to_string() == "B4");

  CHECK(classes[2].representative == tp({Rat(0), kHalf, Rat(0), Rat(0)}));
  CHECK(classes[2].orbit_size == 12);
  CHECK(classes[2].centralizer.to_string() == "A1+C3");

  // orbit-stabilizer cross-check against standalone Weyl groups of the types
  const std::size_t w_f4 = enumerate_weyl(d).size();
  const std::size_t w_b4 =
      enumerate_weyl(generate_roots(catalogue_datum(SubsystemType::parse("B4")))).size();
  const std::size_t w_a1c3 =
      enumerate_weyl(generate_roots(catalogue_datum(SubsystemType::parse("A1+C3")))).size();
  CHECK(w_b4 == 384);
  CHECK(w_a1c3 == 96);
  CHECK(classes[1].orbit_size == w_f4 / w_b4);
  CHECK(classes[2].orbit_size == w_f4 / w_a1c3);
}

TEST_CASE("centralizer types are constant on orbits, and sizes sum to n^4") {
  const RootDatum d = f4();
  const auto gens = simple_reflections(d);
  for (int n : {2, 3}) {
    for (const auto& cls : semisimple_classes(d, n)) {
      const auto orbit = weyl_orbit_torus(gens, cls.representative);
      CHECK(orbit.size() == cls.orbit_size);
      for (const auto& t : orbit) CHECK(centralizer_type(d, t) == cls.centralizer);
    }
  }
  for (int n : {1, 2, 3, 4}) {
    std::size_t total = 0;
    for (const auto& cls : semisimple_classes(d, n)) total += cls.orbit_size;
    std::size_t expected = 1;
    for (int i = 0; i < 4; ++i) expected *= static_cast<std::size_t>(n);
    CHECK(total == expected);
  }
}

TEST_CASE("orbit counts agree with the Burnside fixed-point oracle") {
  // (1 / |W|) * sum over W of #fixed n-torsion points, with fixed points
  // counted by integer arithmetic mod n, independent of the orbit machinery
  const RootDatum d = f4();
  const WeylGroup g = enumerate_weyl(d);
  for (int n : {2, 3, 4}) {
    long long fixed_total = 0;
    for (const auto& w : g.elements) {
      std::vector<int> digits(4, 0);
      while (true) {
        bool fixed = true;
        for (int j = 0; j < 4 && fixed; ++j) {
          long long image = 0;
          for (int i = 0; i < 4; ++i) image += digits[i] * w.my[i][j];
          if (((image - digits[j]) % n + n) % n != 0) fixed = false;
        }
        if (fixed) ++fixed_total;
        int pos = 3;
        while (pos >= 0 && ++digits[pos] == n) digits[pos--] = 0;
        if (pos < 0) break;
      }
    }
    REQUIRE(fixed_total % static_cast<long long>(g.size()) == 0);
    const long long orbit_count = fixed_total / static_cast<long long>(g.size());
    CHECK(orbit_count == static_cast<long long>(semisimple_classes(d, n).size()));
  }
}

TEST_CASE("rank-1 datum: the central 2-torsion point has full centralizer") {
  const RootDatum a1 = generate_roots(build_root_datum({{2}}, "A1"));
  const auto classes = semisimple_classes(a1, 2);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].representative.is_zero());
  CHECK(classes[1].representative == tp({kHalf}));
  CHECK(classes[1].orbit_size == 1);
  CHECK(classes[1].centralizer.to_string() == "A1");
}

TEST_CASE("derived-subgroup membership coordinate") {
  const auto m0 = levi_derived_membership(TorusPoint::zero(4), 2);
  CHECK(m0.coordinate == 0);
  CHECK(m0.in_derived);
  const auto m1 = levi_derived_membership(tp({kHalf, Rat(0), Rat(0), Rat(0)}), 1);
  CHECK(m1.coordinate == kHalf);
  CHECK(!m1.in_derived);
  CHECK_THROWS_AS(levi_derived_membership(TorusPoint::zero(4), 0), std::out_of_range);
  CHECK_THROWS_AS(levi_derived_membership(TorusPoint::zero(4), 5), std::out_of_range);
}

TEST_CASE("t_i is invariant under the levi Weyl group on all 2-torsion points") {
  const RootDatum d = f4();
  const auto refl = simple_reflections(d);
  for (int i = 1; i <= 4; ++i) {
    std::vector<WeylElement> gens;
    for (int k = 0; k < 4; ++k)
      if (d.nodes[k] != i) gens.push_back(refl[k]);
    for (const auto& t : torsion_points(d, 2))
      for (const auto& g : gens)
        CHECK(torus_apply(t, g).coords[i - 1] == t.coords[i - 1]);
  }
}

}  // TEST_SUITE
