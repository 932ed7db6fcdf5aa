#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "sqc/perm.hpp"

using namespace sqc;

namespace {

Permutation cyc(const char* text, int degree) {
  return Permutation::parse_cycles(text, degree);
}

Permutation random_permutation(std::mt19937_64& rng, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

// Plain breadth-first closure over the generators, capped so a runaway set
// fails the test instead of eating memory.
std::set<std::vector<int>> brute_closure(int degree,
                                         const std::vector<Permutation>& gens,
                                         std::size_t cap) {
  auto images = [degree](const Permutation& p) {
    std::vector<int> v(degree);
    for (int i = 0; i < degree; ++i) v[i] = p.image(i);
    return v;
  };
  std::set<std::vector<int>> seen;
  std::vector<Permutation> queue{Permutation(degree)};
  seen.insert(images(queue[0]));
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    REQUIRE(seen.size() <= cap);
    for (const Permutation& g : gens) {
      Permutation next = g * queue[qi];
      if (seen.insert(images(next)).second) queue.push_back(next);
    }
  }
  return seen;
}

PermGroup alt10() {
  return PermGroup(10, {cyc("(1,2,3)", 10), cyc("(2,3,4,5,6,7,8,9,10)", 10)});
}

PermGroup sym10() {
  return PermGroup(10, {cyc("(1,2)", 10), cyc("(1,2,3,4,5,6,7,8,9,10)", 10)});
}

}  // namespace

TEST_SUITE("perm") {

TEST_CASE("cycle notation parses 1-based points") {
  Permutation p = cyc("(7,8)(9,10)", 10);
  CHECK(p.image(6) == 7);
  CHECK(p.image(7) == 6);
  CHECK(p.image(8) == 9);
  CHECK(p.image(9) == 8);
  CHECK(p.image(0) == 0);

  CHECK(cyc("()", 6) == Permutation(6));
  CHECK(cyc("(3)", 6) == Permutation(6));
  CHECK(cyc(" (1,2) (3,4) ", 4) == cyc("(3,4)(1,2)", 4));

  Permutation invol = cyc("(1,7)(2,8)(3,9)(4,10)(5,6)", 10);
  CHECK((invol * invol).is_identity());
  CHECK_FALSE(invol.is_identity());
  CHECK_FALSE(invol.is_even());  // five transpositions
  for (int x = 0; x < 10; ++x) CHECK(invol.image(x) != x);
}

TEST_CASE("cycle notation errors") {
  CHECK_THROWS_AS(cyc("(1,1)", 4), RepeatedPointError);
  CHECK_THROWS_AS(cyc("(1,2)(2,3)", 4), RepeatedPointError);
  CHECK_THROWS_AS(cyc("(0,1)", 4), PointOutOfRangeError);
  CHECK_THROWS_AS(cyc("(5,1)", 4), PointOutOfRangeError);
  CHECK_THROWS_AS(cyc("(1,2", 4), ParseError);
  CHECK_THROWS_AS(cyc("1,2", 4), ParseError);
  CHECK_THROWS_AS(cyc("(1,,2)", 4), ParseError);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 2, 3}), Error);
}

TEST_CASE("cycle strings round-trip") {
  CHECK(Permutation(5).to_cycle_string() == "()");
  CHECK(cyc("(1,2,3)", 5).to_cycle_string() == "(1,2,3)");

  std::mt19937_64 rng(0xc1c1e5);
  for (int trial = 0; trial < 300; ++trial) {
    int degree = 1 + static_cast<int>(rng() % 10);
    Permutation p = random_permutation(rng, degree);
    CHECK(cyc(p.to_cycle_string().c_str(), degree) == p);
  }
}

TEST_CASE("composition applies the right factor first") {
  Permutation p = cyc("(1,2)", 3);
  Permutation q = cyc("(2,3)", 3);
  CHECK((p * q).to_cycle_string() == "(1,2,3)");
  CHECK((q * p).to_cycle_string() == "(1,3,2)");

  Permutation r = cyc("(1,2,3)", 3);
  CHECK(r.inverse().to_cycle_string() == "(1,3,2)");
  CHECK((r * r.inverse()).is_identity());

  CHECK_THROWS_AS(cyc("(1,2)", 3) * cyc("(1,2)", 4), DegreeMismatchError);
}

TEST_CASE("evenness") {
  CHECK(Permutation(4).is_even());
  CHECK_FALSE(cyc("(1,2)", 4).is_even());
  CHECK(cyc("(1,2,3)", 4).is_even());
  CHECK(cyc("(1,2)(3,4)", 4).is_even());
  std::mt19937_64 rng(0x0ddba11);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation p = random_permutation(rng, 8);
    Permutation q = random_permutation(rng, 8);
    CHECK((p * q).is_even() == (p.is_even() == q.is_even()));
  }
}

TEST_CASE("orders of the reference groups") {
  CHECK(sym10().order() == 3628800);
  CHECK(alt10().order() == 1814400);
  CHECK(PermGroup(7, {}).order() == 1);
  CHECK(PermGroup(4, {cyc("(1,2,3,4)", 4)}).order() == 4);

  CHECK(group_order(alt10()) == 1814400);
}

TEST_CASE("membership") {
  PermGroup a10 = alt10();
  CHECK(a10.contains(Permutation(10)));
  CHECK(a10.contains(cyc("(1,2,3)", 10)));
  CHECK(a10.contains(cyc("(1,2)(3,4)", 10)));
  CHECK_FALSE(a10.contains(cyc("(1,2)", 10)));
  CHECK_FALSE(a10.contains(cyc("(1,2,3,4,5,6,7,8,9,10)", 10)));  // odd

  CHECK(membership_test(a10, cyc("(8,9,10)", 10)));
  CHECK_FALSE(membership_test(PermGroup(5, {}), cyc("(1,2)", 5)));

  CHECK_THROWS_AS(PermGroup(5, {cyc("(1,2)", 4)}), DegreeMismatchError);
}

TEST_CASE("point stabilizers") {
  PermGroup s3 = PermGroup(3, {cyc("(1,2)", 3), cyc("(1,2,3)", 3)});
  PermGroup stab = s3.point_stabilizer(0);
  CHECK(stab.order() == 2);
  CHECK(stab.contains(cyc("(2,3)", 3)));

  PermGroup a10_stab = alt10().point_stabilizer(0);
  CHECK(a10_stab.order() == 181440);
  for (const Permutation& g : a10_stab.generators()) CHECK(g.image(0) == 0);

  CHECK_THROWS_AS(s3.point_stabilizer(3), PointOutOfRangeError);
}

TEST_CASE("orbit partitions") {
  PermGroup g = PermGroup(4, {cyc("(1,2)(3,4)", 4)});
  std::vector<std::vector<int>> orbits = g.orbit_partition();
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0] == std::vector<int>{0, 1});
  CHECK(orbits[1] == std::vector<int>{2, 3});
  CHECK_FALSE(g.is_transitive());

  PermGroup id3 = PermGroup(3, {});
  CHECK(id3.orbit_partition().size() == 3);

  CHECK(alt10().is_transitive());
}

TEST_CASE("transitivity degrees and suborbits") {
  PermGroup a10 = alt10();
  CHECK(a10.is_k_transitive(1));
  CHECK(a10.is_k_transitive(2));
  CHECK(a10.pair_orbit_count() == 1);
  CHECK(a10.suborbit_count() == 2);

  PermGroup c4 = PermGroup(4, {cyc("(1,2,3,4)", 4)});
  CHECK(c4.is_transitive());
  CHECK_FALSE(c4.is_k_transitive(2));
  CHECK(c4.pair_orbit_count() == 3);
  CHECK(c4.suborbit_count() == 4);

  PermGroup v = PermGroup(4, {cyc("(1,2)(3,4)", 4)});
  CHECK_FALSE(v.is_k_transitive(1));
  CHECK_THROWS_AS(v.suborbit_count(), NotTransitiveError);

  CHECK_THROWS_AS(a10.is_k_transitive(3), Error);
}

TEST_CASE("two-transitive groups have exactly two suborbits") {
  for (const PermGroup& g :
       {alt10(), sym10(),
        PermGroup(5, {cyc("(1,2)", 5), cyc("(1,2,3,4,5)", 5)})}) {
    REQUIRE(g.is_k_transitive(2));
    CHECK(g.suborbit_count() == 2);
    CHECK(g.pair_orbit_count() == 1);
  }
}

TEST_CASE("chain order and membership agree with brute-force closure") {
  std::mt19937_64 rng(0xbf5eed);
  for (int trial = 0; trial < 25; ++trial) {
    int degree = 3 + static_cast<int>(rng() % 6);  // 3..8
    int gen_count = 1 + static_cast<int>(rng() % 3);
    std::vector<Permutation> gens;
    for (int i = 0; i < gen_count; ++i) {
      gens.push_back(random_permutation(rng, degree));
    }
    CAPTURE(trial);
    CAPTURE(degree);

    std::set<std::vector<int>> closure = brute_closure(degree, gens, 40320);
    PermGroup g(degree, gens);
    CHECK(g.order() == closure.size());

    for (int probe = 0; probe < 30; ++probe) {
      Permutation p = random_permutation(rng, degree);
      std::vector<int> img(degree);
      for (int i = 0; i < degree; ++i) img[i] = p.image(i);
      CHECK(g.contains(p) == (closure.count(img) > 0));
    }
    std::size_t checked = 0;
    for (const std::vector<int>& img : closure) {
      if (++checked > 60) break;
      CHECK(g.contains(Permutation(std::vector<int>(img))));
    }
  }
}

TEST_CASE("orbit-stabilizer identity on transitive groups") {
  for (const PermGroup& g :
       {alt10(), sym10(), PermGroup(4, {cyc("(1,2,3,4)", 4)}),
        PermGroup(6, {cyc("(1,2,3,4,5,6)", 6), cyc("(2,6)(3,5)", 6)})}) {
    REQUIRE(g.is_transitive());
    CHECK(g.order() ==
          static_cast<std::uint64_t>(g.degree()) *
              g.point_stabilizer(0).order());
  }
}

}  // TEST_SUITE
