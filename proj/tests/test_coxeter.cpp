#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "orbitcone/coxeter.hpp"
#include "orbitcone/rng.hpp"

using namespace orbitcone;
using namespace orbitcone::coxeter;

namespace {

// brute-force oracle: exact LP membership of u in conv(enumerate_orbit(v))
bool hull_oracle(const LinearCoxeterSystem& sys, const QVec& v, const QVec& u) {
  return vrep_contains(enumerate_orbit(sys, v), {}, u);
}

}  // namespace

TEST_CASE("builtin systems validate and have the expected shapes") {
  CHECK(builtin("A2").dim() == 3);
  CHECK(builtin("A2").rank() == 2);
  CHECK(builtin("A3").dim() == 4);
  CHECK(builtin("B2").rank() == 2);
  CHECK(builtin("affine_A1").dim() == 2);
  CHECK(builtin("affine_A1").level().has_value());
  CHECK(builtin("affine_A2").dim() == 3);
  CHECK_THROWS_AS(builtin("E8"), UnknownName);

  // G2 has order 12, seen through any regular orbit
  auto g2 = builtin("G2");
  CHECK(enumerate_orbit(g2, g2.chamber_interior_point()).size() == 12);
  // B2 has order 8
  auto b2 = builtin("B2");
  CHECK(enumerate_orbit(b2, b2.chamber_interior_point()).size() == 8);
}

TEST_CASE("reflection data axioms are enforced") {
  ReflectionData bad;
  bad.dim = 2;
  bad.alphas = {qvec({1, 0})};
  bad.coroots = {qvec({1, 0})};  // pairing 1, not 2
  CHECK_THROWS_AS(LinearCoxeterSystem(bad, Lcs3Status::Declared), std::invalid_argument);

  ReflectionData lcs2;  // alpha_2 = 2 alpha_1 violates LCS2
  lcs2.dim = 2;
  lcs2.alphas = {qvec({1, 0}), qvec({2, 0})};
  lcs2.coroots = {qvec({2, 0}), qvec({1, 0})};
  CHECK_THROWS_AS(LinearCoxeterSystem(lcs2, Lcs3Status::Declared), std::invalid_argument);

  // a valid user-supplied system passes the empirical chamber check
  ReflectionData a1;
  a1.dim = 2;
  a1.alphas = {qvec({-1, 1})};
  a1.coroots = {qvec({-1, 1})};
  CHECK_NOTHROW(LinearCoxeterSystem(a1, Lcs3Status::EmpiricallyChecked, 6));
}

TEST_CASE("reflect") {
  auto a1 = builtin("A1");
  CHECK(a1.reflect(0, qvec({3, 1})) == qvec({1, 3}));
  QVec fixed = qvec({2, 2});
  CHECK(a1.reflect(0, fixed) == fixed);

  RngStream rng(5);
  auto g2 = builtin("G2");
  for (int i = 0; i < 100; ++i) {
    QVec v = rng.rational_vec(2, -9, 9, 4);
    for (std::size_t s = 0; s < 2; ++s) CHECK(g2.reflect(s, g2.reflect(s, v)) == v);
  }
  for (const auto& name : {"A2", "B2", "G2", "affine_A1", "affine_A2"}) {
    auto sys = builtin(name);
    for (std::size_t s = 0; s < sys.rank(); ++s) {
      Rational d = determinant(sys.reflection_matrix(s));
      CHECK((d == 1 || d == -1));
    }
  }
}

TEST_CASE("to_dominant") {
  auto a2 = builtin("A2");
  SUBCASE("sorts into nondecreasing coordinates") {
    auto f = to_dominant(a2, qvec({2, 1, 0}), 64);
    CHECK(f.rep == qvec({0, 1, 2}));
    CHECK(a2.apply_word(f.word, qvec({2, 1, 0})) == f.rep);
    // oracle: dominant representative is the sorted vector, over all 6 permutations
    QVec sorted = qvec({0, 1, 2});
    auto orbit = enumerate_orbit(a2, qvec({2, 1, 0}));
    CHECK(std::count(orbit.begin(), orbit.end(), sorted) == 1);
  }
  SUBCASE("already dominant") {
    auto f = to_dominant(a2, qvec({0, 1, 2}), 64);
    CHECK(f.rep == qvec({0, 1, 2}));
    CHECK(f.word.word.empty());
  }
  SUBCASE("stabilizer generators") {
    auto f = to_dominant(a2, qvec({1, 1, 3}), 64);
    CHECK(f.stabilizer_generators == std::vector<std::size_t>{0});
  }
  SUBCASE("negative level never reaches the chamber") {
    auto aff = builtin("affine_A1");
    CHECK_THROWS_AS(to_dominant(aff, qvec({1, -1}), 500), CapExceeded);
    CHECK_THROWS_AS(to_dominant(aff, qvec({0, -3}), 500), CapExceeded);
  }
  SUBCASE("random descent lands in the chamber, word reproduces rep") {
    RngStream rng(23);
    for (const auto& name : {"A3", "B2", "G2"}) {
      auto sys = builtin(name);
      for (int i = 0; i < 50; ++i) {
        QVec v = rng.rational_vec(sys.dim(), -5, 5, 2);
        auto f = to_dominant(sys, v, sys.default_cap());
        CHECK(sys.chamber().contains(f.rep));
        CHECK(sys.apply_word(f.word, v) == f.rep);
      }
    }
  }
}

TEST_CASE("tits cone classification") {
  SUBCASE("finite groups: everything is interior") {
    auto a2 = builtin("A2");
    RngStream rng(31);
    for (int i = 0; i < 30; ++i)
      CHECK(tits_cone_classify(a2, rng.rational_vec(3, -5, 5, 2)) == TitsClass::Interior);
  }
  SUBCASE("affine: positive level with trivial stabilizer is interior") {
    auto aff = builtin("affine_A1");
    CHECK(tits_cone_classify(aff, {Rational(1, 3), Rational(1)}) == TitsClass::Interior);
  }
  SUBCASE("affine: the level-zero fixed line is boundary") {
    auto aff = builtin("affine_A1");
    CHECK(tits_cone_classify(aff, qvec({0, 0})) == TitsClass::BoundaryOrOutside);
    CHECK(tits_cone_classify(aff, qvec({2, 0})) == TitsClass::BoundaryOrOutside);
    CHECK(tits_cone_classify(aff, qvec({1, -2})) == TitsClass::BoundaryOrOutside);
  }
  SUBCASE("affine A2: full stabilizer is the whole affine group") {
    auto aff = builtin("affine_A2");
    CHECK(tits_cone_classify(aff, qvec({0, 0, 0})) == TitsClass::BoundaryOrOutside);
    CHECK(tits_cone_classify(aff, qvec({0, 0, 1})) != TitsClass::Interior);  // level wall corner
    CHECK(tits_cone_classify(aff, qvec({1, 1, 3})) == TitsClass::Interior);
  }
}

TEST_CASE("parabolic finite-type table") {
  auto a3 = builtin("A3");
  CHECK(*parabolic_is_finite(a3, {0, 1, 2}) == true);   // A3 path (3,3)
  CHECK(*parabolic_is_finite(a3, {0, 2}) == true);      // A1 x A1
  CHECK(*parabolic_is_finite(a3, {}) == true);
  auto aff = builtin("affine_A1");
  CHECK(*parabolic_is_finite(aff, {0, 1}) == false);    // infinite bond
  auto aff2 = builtin("affine_A2");
  CHECK(*parabolic_is_finite(aff2, {0, 1, 2}) == false);  // (3,3,3) triangle
  CHECK(*parabolic_is_finite(aff2, {0, 1}) == true);
  CHECK(pair_order(builtin("B2"), 0, 1) == 4);
  CHECK(pair_order(builtin("G2"), 0, 1) == 6);
  CHECK(pair_order(builtin("A2"), 0, 1) == 3);
  CHECK(pair_order(aff, 0, 1) == 0);
}

TEST_CASE("orbit hull membership matches the paper examples") {
  auto a2 = builtin("A2");
  CHECK(orbit_hull_membership(a2, qvec({0, 1, 2}), qvec({1, 1, 1})));
  CHECK_FALSE(orbit_hull_membership(a2, qvec({0, 1, 2}), qvec({0, 0, 3})));
  // orbit points are in their own hull
  WeylWord w{{0, 1, 0}};
  CHECK(orbit_hull_membership(a2, qvec({0, 1, 2}), a2.apply_word(w, qvec({0, 1, 2}))));
}

TEST_CASE("dominance test equals the brute-force hull oracle") {
  RngStream rng(41);
  for (const auto& name : {"A2", "A3", "B2", "G2"}) {
    auto sys = builtin(name);
    for (int i = 0; i < 40; ++i) {
      QVec v = rng.rational_vec(sys.dim(), -5, 5, 2);
      QVec u = rng.rational_vec(sys.dim(), -5, 5, 2);
      CHECK(orbit_hull_membership(sys, v, u) == hull_oracle(sys, v, u));
      // W-invariance of the test
      WeylWord w{{0, static_cast<std::size_t>(rng.uniform_int(0, sys.rank() - 1))}};
      CHECK(orbit_hull_membership(sys, v, u) ==
            orbit_hull_membership(sys, v, sys.apply_word(w, u)));
    }
  }
}

TEST_CASE("hull points also arise as convex combinations") {
  RngStream rng(43);
  auto a3 = builtin("A3");
  for (int i = 0; i < 20; ++i) {
    QVec v = rng.rational_vec(4, -4, 4, 1);
    auto orbit = enumerate_orbit(a3, v);
    // random convex combination of <= 4 orbit points
    QVec u = zero_vec(4);
    Rational total(0);
    std::vector<Rational> weights;
    for (int k = 0; k < 4; ++k) weights.push_back(rng.rational(1, 10));
    for (auto& wt : weights) total += wt;
    for (int k = 0; k < 4; ++k) {
      const QVec& p = orbit[rng.uniform_int(0, orbit.size() - 1)];
      u = add(u, scale(weights[k] / total, p));
    }
    CHECK(orbit_hull_membership(a3, v, u));
  }
}

TEST_CASE("lemma22 step sizes") {
  auto a1 = builtin("A1");
  const auto& roots1 = a1.enumerate_roots(2);
  // v = (0,2): the positive root has value 2, step lands on the far orbit point
  Root pos1;
  for (const auto& r : roots1)
    if (r.positive) pos1 = r;
  Rational eps = lemma22_step(a1, qvec({0, 2}), {{pos1, Rational(1)}});
  CHECK(eps == 2);
  CHECK(sub(qvec({0, 2}), scale(eps, pos1.coroot)) == a1.reflect(0, qvec({0, 2})));

  // two-term expansion in A2 with c = (1,1) on roots with values (1,2)
  auto a2 = builtin("A2");
  QVec v = qvec({0, 1, 2});
  const auto& roots2 = a2.enumerate_roots(3);
  std::vector<Root> pick;
  for (const auto& r : roots2)
    if (dot(r.alpha, v) == 1 || dot(r.alpha, v) == 2) pick.push_back(r);
  Root r1, r2;
  bool have1 = false;
  for (const auto& r : pick) {
    if (dot(r.alpha, v) == 1 && !have1) { r1 = r; have1 = true; }
    if (dot(r.alpha, v) == 2) r2 = r;
  }
  REQUIRE(have1);
  Rational eps2 = lemma22_step(a2, v, {{r1, Rational(1)}, {r2, Rational(1)}});
  CHECK(eps2 == Rational(2, 3));

  // scaling c by t scales eps by 1/t
  Rational eps3 = lemma22_step(a2, v, {{r1, Rational(3)}, {r2, Rational(3)}});
  CHECK(eps3 == eps2 / 3);

  CHECK_THROWS_AS(lemma22_step(a1, qvec({2, 0}), {{pos1, Rational(1)}}), InvalidExpansion);
}

TEST_CASE("root enumeration") {
  auto a2 = builtin("A2");
  const auto& r3 = a2.enumerate_roots(3);
  CHECK(r3.size() == 6);
  CHECK(std::count_if(r3.begin(), r3.end(), [](const Root& r) { return r.positive; }) == 3);

  const auto& r0 = a2.enumerate_roots(0);
  CHECK(r0.size() == 2);  // simple roots only

  auto aff = builtin("affine_A1");
  for (std::size_t bound : {0u, 1u, 3u, 6u}) {
    const auto& roots = aff.enumerate_roots(bound);
    CHECK(roots.size() == 2 * bound + 2);
  }

  // every enumerated root is positive or negative, never on the wall, and
  // negation flips the sign when both are present
  auto g2 = builtin("G2");
  const auto& rg = g2.enumerate_roots(6);
  CHECK(rg.size() == 12);
  for (const auto& r : rg) {
    auto neg = std::find_if(rg.begin(), rg.end(),
                            [&](const Root& o) { return o.alpha == negate(r.alpha); });
    REQUIRE(neg != rg.end());
    CHECK(neg->positive == !r.positive);
  }
}

TEST_CASE("cone of coroots positive on v") {
  auto a2 = builtin("A2");
  SUBCASE("interior point reproduces the simple coroot cone") {
    PolyhedralSet cv = cone_Cv(a2, qvec({0, 1, 2}), 3);
    CHECK(sets_equal(cv, a2.simple_coroot_cone()));
  }
  SUBCASE("wall point excludes the fixed coroot and matches the intersection") {
    QVec v = qvec({1, 1, 3});  // fixed by s1
    PolyhedralSet cv = cone_Cv(a2, v, 3);
    CHECK_FALSE(cv.contains(a2.data().coroots[0]));
    // C_v = intersection of wC_S over the stabilizer {e, r_1}
    PolyhedralSet cs = a2.simple_coroot_cone();
    std::vector<HalfSpace> both = cs.hrep();
    for (const auto& h : cs.hrep()) {
      QVec moved(3, Rational(0));
      QMat r = a2.reflection_matrix(0);
      // normal transforms by the inverse transpose; reflections are involutions
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) moved[j] += h.normal[i] * r(i, j);
      both.push_back({moved, Rational(0), false});
    }
    CHECK(sets_equal(cv, PolyhedralSet::from_hrep(3, both)));
  }
}

TEST_CASE("affine A1 geometry") {
  auto aff = builtin("affine_A1");
  RngStream rng(47);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 100; ++i) {
    QVec v = {rng.rational(-5, 5, 2), rng.rational(1, 5, 2)};  // positive level
    auto f = try_to_dominant(aff, v, aff.default_cap());
    REQUIRE(f.has_value());
    if (tits_cone_classify(aff, v) != TitsClass::Interior) continue;
    ++checked;
    // sampled hull points keep positive level and pass the one-sided check
    const auto& lvl = *aff.level();
    std::vector<QVec> pts;
    QVec cur = v;
    for (int k = 0; k < 6; ++k) {
      pts.push_back(cur);
      cur = aff.reflect(rng.uniform_int(0, 1), cur);
    }
    QVec u = zero_vec(2);
    for (const auto& p : pts) u = add(u, scale(Rational(1, (long)pts.size()), p));
    CHECK(dot(lvl, u) > 0);
    auto fu = try_to_dominant(aff, u, aff.default_cap());
    REQUIRE(fu.has_value());
    CHECK(cone_contains(aff.data().coroots, sub(f->rep, fu->rep)));
  }
  CHECK(checked == 100);
}
