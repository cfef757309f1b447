#include <algorithm>
#include <numeric>
#include <random>

#include "bouquet/moves.hpp"
#include "bouquet/render.hpp"
#include "doctest.h"

using namespace bouquet;

namespace {

// Two curves on a sphere crossing twice: four bigon faces.
GaussCode sphere_pair() { return {{{"a", {{0, 0}, {1, 0}}}, {"b", {{0, 1}, {1, 1}}}}, {{0, 1}, {1, -1}}, {}}; }

// Torus: a horizontal, b vertical, c a copy of a above it with a finger
// pushed down across a. The finger straddles b, so the {a, c} bigon holds
// an arc of b.
GaussCode finger_over_b() {
  return {{{"a", {{1, 0}, {0, 0}, {2, 0}}}, {"b", {{3, 0}, {0, 1}}}, {"c", {{1, 1}, {3, 1}, {2, 1}}}},
          {{0, 1}, {1, -1}, {2, 1}, {3, -1}},
          {}};
}

// The same finger placed away from b.
GaussCode finger_beside_b() {
  return {{{"a", {{0, 0}, {1, 0}, {2, 0}}}, {"b", {{0, 1}, {3, 0}}}, {"c", {{3, 1}, {1, 1}, {2, 1}}}},
          {{0, 1}, {1, -1}, {2, 1}, {3, -1}},
          {}};
}

GaussCode mirrored(GaussCode code) {
  for (auto& c : code.crossings) c.sign = -c.sign;
  return code;
}

int i_num(const CurveSystem& s, int u, int v) { return intersection_number(s, u, v).count; }

bool isomorphic_to_some_relabeling(const CurveSystem& a, const CurveSystem& b) {
  std::vector<int> perm(a.curve_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (maps_isomorphic(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("hand-built instances are valid") {
  for (const auto& code : {sphere_pair(), finger_over_b(), finger_beside_b()}) {
    CHECK_FALSE(validate(code).has_value());
  }
  CHECK(CurveSystem::from_gauss(sphere_pair()).surface().genus == 0);
  CHECK(CurveSystem::from_gauss(finger_over_b()).surface().genus == 1);
  CHECK(CurveSystem::from_gauss(finger_beside_b()).surface().genus == 1);
}

TEST_CASE("find_bigon") {
  CHECK_FALSE(find_bigon(build_bouquet(2), 0, 1).has_value());
  CHECK_FALSE(find_bigon(build_bouquet(3), 0, 1).has_value());
  auto sphere = CurveSystem::from_gauss(sphere_pair());
  auto found = find_bigons(sphere, 0, 1);
  CHECK(found.free.size() == 4);
  CHECK(found.punctured.empty());
  auto finger = CurveSystem::from_gauss(finger_beside_b());
  auto bigon = find_bigon(finger, 0, 2);
  REQUIRE(bigon.has_value());
  CHECK(bigon->region.is_unpunctured_disk());
  CHECK(bigon->corners.size() == 2);
  CHECK_FALSE(find_bigon(finger, 0, 1).has_value());
}

TEST_CASE("reduce_pair") {
  auto sphere = CurveSystem::from_gauss(sphere_pair());
  auto r = reduce_pair(sphere, 0, 1);
  CHECK(r.system.crossings_between(0, 1) == 0);
  CHECK(r.removed == 1);
  CHECK_FALSE(r.blocked);
  r.system.check_invariants();

  // Already minimal: nothing changes.
  auto b3 = build_bouquet(3);
  auto same = reduce_pair(b3, 0, 1);
  CHECK(same.removed == 0);
  CHECK(maps_isomorphic(same.system, b3, {0, 1, 2}));

  // A bigon of {a, c} crossed by an arc of b, which enters through one side
  // and leaves through the other. After the sweep b still meets a and c
  // once each; only the two corners disappear.
  auto finger = CurveSystem::from_gauss(finger_over_b());
  const int before = finger.crossings_between(1, 0) + finger.crossings_between(1, 2);
  auto f = reduce_pair(finger, 0, 2);
  CHECK(f.system.crossings_between(0, 2) == 0);
  const int after = f.system.crossings_between(1, 0) + f.system.crossings_between(1, 2);
  CHECK(before - after == 0);
  CHECK(f.system.crossing_count() == finger.crossing_count() - 2);
  f.system.check_invariants();
}

TEST_CASE("reducing a bigon that holds a third arc") {
  auto finger = CurveSystem::from_gauss(finger_over_b());
  CHECK(finger.crossings_between(0, 1) == 1);
  CHECK(finger.crossings_between(1, 2) == 1);
  CHECK(finger.crossings_between(0, 2) == 2);
  auto r = reduce_all(finger);
  CHECK(r.system.crossings_between(0, 2) == 0);
  CHECK(r.system.crossings_between(0, 1) == 1);
  CHECK(r.system.crossings_between(1, 2) == 1);
  CHECK(isotopic(r.system, 0, 2).isotopic);
}

TEST_CASE("intersection numbers") {
  CHECK(i_num(build_bouquet(2), 0, 1) == 1);
  CHECK(i_num(build_chain(3), 0, 2) == 0);
  auto b5 = build_bouquet(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) CHECK(i_num(b5, u, v) == 1);
  CHECK(i_num(CurveSystem::from_gauss(sphere_pair()), 0, 1) == 0);
  CHECK_THROWS_AS(intersection_number(b5, 2, 2), MoveRefused);
}

TEST_CASE("punctured bigons block reduction") {
  auto sphere = CurveSystem::from_gauss(sphere_pair());
  for (const auto& f : sphere.faces()) sphere.puncture_face(f.key);
  auto r = reduce_pair(sphere, 0, 1);
  CHECK(r.blocked);
  CHECK(r.removed == 0);
  CHECK(r.blocked_keys.size() == 4);
  auto i = intersection_number(sphere, 0, 1);
  CHECK(i.blocked);
  CHECK(i.count == 2);
  auto search = find_bigons(sphere, 0, 1);
  REQUIRE_FALSE(search.punctured.empty());
  CHECK_THROWS_AS(isotope_across(sphere, 0, search.punctured.front().region), MoveRefused);
}

TEST_CASE("isotope_across") {
  auto finger = CurveSystem::from_gauss(finger_beside_b());
  auto bigon = find_bigon(finger, 0, 2);
  REQUIRE(bigon.has_value());
  // Sweeping across a bigon is one reduction step.
  auto swept = isotope_across(finger, 2, bigon->region);
  auto step = reduce_pair(finger, 0, 2);
  CHECK(step.removed == 1);
  CHECK(swept.crossings_between(0, 2) == 0);
  CHECK(maps_isomorphic(swept, step.system, {0, 1, 2}));

  // Sweeping a curve across the bouquet triangle gives the bouquet again.
  auto b3 = build_bouquet(3);
  std::optional<Region> triangle;
  for (auto& r : b3.complement_regions({0, 1, 2}))
    if (r.boundary.front().sides.size() == 3) triangle = r;
  REQUIRE(triangle.has_value());
  auto moved = isotope_across(b3, 2, *triangle);
  moved.check_invariants();
  CHECK(moved.crossing_count() == 3);
  CHECK(moved.is_plain());
  CHECK(isomorphic_to_some_relabeling(moved, b3));

  // A region with two sides on the swept curve is refused.
  auto torus = build_bouquet(2);
  auto square = torus.complement_regions({0, 1}).front();
  CHECK_THROWS_AS(isotope_across(torus, 0, square), MoveRefused);
}

TEST_CASE("isotopy test") {
  auto b2 = build_bouquet(2);
  auto pushed = push_off(b2, 0, "a'");
  CHECK(pushed.crossings_between(0, 2) == 0);
  CHECK(isotopic(pushed, 0, 2).isotopic);
  CHECK_FALSE(isotopic(b2, 0, 1).isotopic);
  // On the closed torus the chain's ends are parallel.
  auto chain = build_chain(3);
  CHECK(isotopic(chain, 0, 2).isotopic);
  // With every face punctured the annulus between them is gone.
  for (const auto& f : chain.faces()) chain.puncture_face(f.key);
  CHECK_FALSE(isotopic(chain, 0, 2).isotopic);
  CHECK_FALSE(isotopic(build_chain(4), 0, 2).isotopic);
}

TEST_CASE("dehn twists") {
  auto torus = build_bouquet(2);
  auto t = dehn_twist(torus, 0, 1, 1);
  t.check_invariants();
  CHECK(i_num(t, 0, 1) == 1);
  CHECK_THROWS_AS(dehn_twist(torus, 0, 0, 1), MoveRefused);
  CHECK_THROWS_AS(dehn_twist(torus, 0, 1, 3), MoveRefused);

  // Handedness calibration: z = T_b^-1(c) is disjoint from a in bouquet3.
  auto b3 = build_bouquet(3);
  auto z = reduce_all(dehn_twist(b3, 2, 1, -1)).system;
  CHECK(i_num(z, 0, 2) == 0);
  auto z_pos = reduce_all(dehn_twist(b3, 2, 1, 1)).system;
  CHECK(i_num(z_pos, 0, 2) == 2);

  // Inverse twists give back the original curve.
  auto ref = push_off(b3, 2, "c0");
  auto back = reduce_all(dehn_twist(dehn_twist(ref, 2, 1, 1), 2, 1, -1)).system;
  CHECK(isotopic(back, 2, 3).isotopic);
}

TEST_CASE("twist self-intersection formula") {
  // i(T_b^k(c), c) = |k| i(b, c)^2.
  struct Case {
    CurveSystem s;
    int b, c;
  };
  std::vector<Case> cases{{build_bouquet(2), 0, 1}, {build_bouquet(2), 1, 0}, {build_bouquet(3), 0, 2},
                          {build_bouquet(4), 1, 3}};
  for (auto& cs : cases) {
    const int ibc = i_num(cs.s, cs.b, cs.c);
    auto with_copy = push_off(cs.s, cs.c, "copy");
    const int copy = with_copy.curve_count() - 1;
    for (int k = -2; k <= 2; ++k) {
      auto t = k == 0 ? with_copy : dehn_twist(with_copy, copy, cs.b, k);
      t.check_invariants();
      CHECK(i_num(t, copy, cs.c) == std::abs(k) * ibc * ibc);
    }
  }
}

TEST_CASE("twist identity T_b(c) = T_c^-1(b)") {
  for (int n = 2; n <= 4; ++n) {
    auto s = build_bouquet(n);
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (b == c) continue;
        auto t = push_off(push_off(s, c, "tc"), b, "tb");
        const int tc = n, tb = n + 1;
        t = dehn_twist(t, tc, b, 1);
        t = dehn_twist(t, tb, c, -1);
        t = reduce_all(t).system;
        CHECK(isotopic(t, tc, tb).isotopic);
      }
  }
}

TEST_CASE("cyclic order") {
  auto b3 = build_bouquet(3);
  CHECK(cyclic_order(b3, 0, 1, 2).order == Order::ABC);
  CHECK(cyclic_order(b3, 0, 2, 1).order == Order::ACB);
  // 3-cycles keep the verdict, transpositions flip it.
  CHECK(cyclic_order(b3, 1, 2, 0).order == Order::ABC);
  CHECK(cyclic_order(b3, 2, 0, 1).order == Order::ABC);
  CHECK(cyclic_order(b3, 1, 0, 2).order == Order::ACB);
  auto mirror = CurveSystem::from_gauss(mirrored(bouquet_code(3)));
  CHECK(cyclic_order(mirror, 0, 1, 2).order == Order::ACB);
  CHECK_THROWS_AS(cyclic_order(build_chain(3), 0, 1, 2), MoveRefused);
  auto v = cyclic_order(b3, 0, 1, 2);
  CHECK(v.eps_ab * v.eps_bc * v.eps_ca == kBouquetChirality);
}

TEST_CASE("cyclic order ignores curve orientations") {
  auto code = bouquet_code(4);
  auto base = CurveSystem::from_gauss(code);
  for (std::size_t c = 0; c < code.curves.size(); ++c) {
    auto flipped = code;
    auto& visits = flipped.curves[c].visits;
    std::reverse(visits.begin(), visits.end());
    for (const auto& v : visits)
      for (auto& x : flipped.crossings)
        if (x.id == v.crossing) x.sign = -x.sign;
    auto s = CurveSystem::from_gauss(flipped);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int d = 0; d < 4; ++d) {
          if (a == b || b == d || a == d) continue;
          CHECK(cyclic_order(s, a, b, d).order == cyclic_order(base, a, b, d).order);
        }
  }
}

TEST_CASE("confluence of random reduction orders") {
  std::mt19937_64 rng(31);
  auto b4 = build_bouquet(4);
  auto twisted = dehn_twist(dehn_twist(b4, 2, 0, 2), 3, 1, -1);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      const int expected = i_num(twisted, u, v);
      for (int trial = 0; trial < 50; ++trial) CHECK(intersection_number(twisted, u, v, &rng).count == expected);
    }
}

TEST_CASE("moves keep the map valid") {
  std::mt19937_64 rng(37);
  auto s = build_bouquet(5);
  for (int step = 0; step < 6; ++step) {
    std::uniform_int_distribution<int> pick(0, 4);
    int target = pick(rng), along = pick(rng);
    if (target == along) along = (along + 1) % 5;
    s = dehn_twist(s, target, along, step % 2 ? 1 : -1);
    s.check_invariants();
    CHECK_FALSE(validate(s.gauss_code()).has_value());
    s = reduce_all(s, &rng).system;
    s.check_invariants();
  }
}
