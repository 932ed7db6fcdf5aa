#include <algorithm>
#include <cstdint>
#include <sstream>

#include "doctest.h"
#include "sqc/presentation.hpp"
#include "test_helpers.hpp"

using namespace sqc;
using test_util::w;

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t catalog_checksum(CatalogName n) {
  std::ostringstream out;
  save_presentation(builtin_presentation(n), out);
  return fnv1a(out.str());
}

}  // namespace

TEST_SUITE("presentations") {

TEST_CASE("catalog sizes") {
  for (CatalogName n :
       {CatalogName::Gamma1, CatalogName::Gamma2, CatalogName::Gamma3}) {
    Presentation p = builtin_presentation(n);
    CHECK(p.relators.size() == 25);
    CHECK(p.alphabet.family_size(Family::A) == 5);
    CHECK(p.alphabet.family_size(Family::B) == 5);
    CHECK(p.name == to_string(n));
  }
  Presentation ww = builtin_presentation(CatalogName::WiseW);
  CHECK(ww.relators.size() == 12);
  CHECK(ww.alphabet.family_size(Family::A) == 4);
  CHECK(ww.alphabet.family_size(Family::B) == 3);
}

TEST_CASE("catalog relator spot checks") {
  Presentation g1 = builtin_presentation(CatalogName::Gamma1);
  Presentation g2 = builtin_presentation(CatalogName::Gamma2);
  Presentation g3 = builtin_presentation(CatalogName::Gamma3);
  const Alphabet& alph = g1.alphabet;

  CHECK(g1.relators[0] == w("a1 b1 A2 B2", alph));
  CHECK(g1.relators[11] == w("a4 b2 A4 B1", alph));

  CHECK(g1.relators[12] == w("a1 b4 a2 B5", alph));
  CHECK(g2.relators[12] == w("a1 b4 A4 b5", alph));
  CHECK(g3.relators[12] == w("a1 b4 a1 b5", alph));

  CHECK(g3.relators[21] == w("a5 b1 a5 b4", alph));

  CHECK(g1.relators[24] == w("a5 b4 A5 B2", alph));
  CHECK(g2.relators[24] == w("a5 b4 A5 B2", alph));
  CHECK(g3.relators[24] == w("a5 B4 a5 B1", alph));
}

TEST_CASE("the first twelve relators are shared, and are the small catalog") {
  Presentation g1 = builtin_presentation(CatalogName::Gamma1);
  Presentation g2 = builtin_presentation(CatalogName::Gamma2);
  Presentation g3 = builtin_presentation(CatalogName::Gamma3);
  Presentation ww = builtin_presentation(CatalogName::WiseW);
  for (int i = 0; i < 12; ++i) {
    CAPTURE(i);
    CHECK(g1.relators[i] == g2.relators[i]);
    CHECK(g1.relators[i] == g3.relators[i]);
    // Letters are index-based, so words carry across the smaller alphabet.
    CHECK(g1.relators[i] == ww.relators[i]);
  }
}

TEST_CASE("catalog serializations are stable") {
  CHECK(catalog_checksum(CatalogName::Gamma1) == 0x0e37212c7e9a7d9full);
  CHECK(catalog_checksum(CatalogName::Gamma2) == 0xc4a61e1b1f287a58ull);
  CHECK(catalog_checksum(CatalogName::Gamma3) == 0xd9bbc04b63c1b547ull);
  CHECK(catalog_checksum(CatalogName::WiseW) == 0xf9094cf56bfbb4e4ull);
}

TEST_CASE("catalog_name_from_string") {
  CHECK(catalog_name_from_string("gamma1") == CatalogName::Gamma1);
  CHECK(catalog_name_from_string("gamma2") == CatalogName::Gamma2);
  CHECK(catalog_name_from_string("gamma3") == CatalogName::Gamma3);
  CHECK(catalog_name_from_string("wiseW") == CatalogName::WiseW);
  CHECK_THROWS_AS(catalog_name_from_string("gamma4"), UnknownCatalogNameError);
  CHECK_THROWS_AS(catalog_name_from_string("Gamma1"), UnknownCatalogNameError);
  CHECK(to_string(CatalogName::Gamma2) == "gamma2");
}

TEST_CASE("catalog constants") {
  Presentation g1 = builtin_presentation(CatalogName::Gamma1);
  const Alphabet& alph = g1.alphabet;
  CatalogConstants cc = catalog_constants();

  CHECK(cc.w == w("a2 A1 a3 A4", alph));
  CHECK(cc.witness == w("b1 B2", alph));
  CHECK(parity_image(cc.w) == ParityVector{0, 0});
  CHECK(parity_image(cc.witness) == ParityVector{0, 0});

  REQUIRE(cc.aprime.size() == 5);
  CHECK(cc.aprime[0] == w("a1 A2 a1 A2", alph));
  CHECK(cc.aprime[1] == w("A2 a1 A2 a1", alph));
  CHECK(cc.aprime[2] == w("a3 A4 a3 A4", alph));
  CHECK(cc.aprime[3] == w("A4 a3 A4 a3", alph));
  CHECK(cc.aprime[4] == w("a5 a5 a5 a5", alph));

  std::vector<Word> signed_set = catalog_aprime_signed();
  REQUIRE(signed_set.size() == 10);
  auto member = [&](const Word& u) {
    return std::find(signed_set.begin(), signed_set.end(), u) !=
           signed_set.end();
  };
  for (const Word& u : cc.aprime) CHECK(member(u));
  for (const Word& u : signed_set) {
    CHECK(member(invert_word(u)));
    CHECK(u.size() == 4);
    CHECK(parity_image(u) == ParityVector{0, 0});
    for (Letter l : u) CHECK(l.family == Family::A);
  }
}

TEST_CASE("validate_presentation on the catalog") {
  for (CatalogName n : {CatalogName::Gamma1, CatalogName::Gamma2,
                        CatalogName::Gamma3, CatalogName::WiseW}) {
    ValidationReport rep = validate_presentation(builtin_presentation(n));
    CAPTURE(to_string(n));
    CHECK(rep.relator_count == (n == CatalogName::WiseW ? 12 : 25));
    CHECK(rep.all_length_four);
    CHECK(rep.all_alternating);
    CHECK(rep.problems.empty());
  }
}

TEST_CASE("validate_presentation flags structural defects") {
  Alphabet alph({"a1", "a2"}, {"b1", "b2"});

  SUBCASE("wrong length") {
    Presentation p{alph, {w("a1 b1 A1", alph)}, std::nullopt};
    ValidationReport rep = validate_presentation(p);
    CHECK_FALSE(rep.all_length_four);
    CHECK_FALSE(rep.problems.empty());
  }

  SUBCASE("right length, no family alternation") {
    Presentation p{alph, {w("a1 a2 b1 b2", alph)}, std::nullopt};
    ValidationReport rep = validate_presentation(p);
    CHECK(rep.all_length_four);
    CHECK_FALSE(rep.all_alternating);
    CHECK_FALSE(rep.problems.empty());
  }

  SUBCASE("not freely reduced") {
    Presentation p{alph, {w("a1 A1 b1 b2", alph)}, std::nullopt};
    ValidationReport rep = validate_presentation(p);
    CHECK_FALSE(rep.problems.empty());
  }

  SUBCASE("clean flags imply no problems") {
    Presentation p{alph,
                   {w("a1 b1 A2 B2", alph), w("b2 a1 B1 A1", alph)},
                   std::nullopt};
    ValidationReport rep = validate_presentation(p);
    CHECK(rep.all_length_four);
    CHECK(rep.all_alternating);
    CHECK(rep.problems.empty());
  }
}

TEST_CASE("generator usage counts letters across all relators") {
  ValidationReport rep =
      validate_presentation(builtin_presentation(CatalogName::Gamma1));
  REQUIRE(rep.generator_usage.size() == 10);
  int total = 0;
  for (const auto& [name, count] : rep.generator_usage) {
    CHECK(count > 0);
    total += count;
  }
  CHECK(total == 100);
}

TEST_CASE("save and load round-trip") {
  for (CatalogName n : {CatalogName::Gamma1, CatalogName::WiseW}) {
    Presentation p = builtin_presentation(n);
    std::ostringstream out;
    save_presentation(p, out);
    std::istringstream in(out.str());
    Presentation q = load_presentation(in, "roundtrip");
    CHECK(q.alphabet == p.alphabet);
    CHECK(q.relators == p.relators);
  }
}

TEST_CASE("loader accepts comments and blank lines") {
  std::istringstream in(
      "# square presentation\n"
      "\n"
      "a-generators: a1 a2\n"
      "b-generators: b1\n"
      "  # indented comment\n"
      "relator: a1 b1 A2 B1\n");
  Presentation p = load_presentation(in, "inline");
  CHECK(p.alphabet.family_size(Family::A) == 2);
  CHECK(p.alphabet.family_size(Family::B) == 1);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == w("a1 b1 A2 B1", p.alphabet));
}

TEST_CASE("loader with headers only yields no relators") {
  std::istringstream in("a-generators: a1\nb-generators: b1\n");
  Presentation p = load_presentation(in, "inline");
  CHECK(p.relators.empty());
}

TEST_CASE("loader error reporting") {
  SUBCASE("unknown generator token") {
    std::istringstream in(
        "a-generators: a1\nb-generators: b1\nrelator: a1 c9\n");
    CHECK_THROWS_AS(load_presentation(in, "inline"), UnknownGeneratorError);
  }
  SUBCASE("duplicate generator name") {
    std::istringstream in("a-generators: a1 a1\nb-generators: b1\n");
    CHECK_THROWS_AS(load_presentation(in, "inline"), DuplicateGeneratorError);
  }
  SUBCASE("missing generator header") {
    std::istringstream in("a-generators: a1\nrelator: a1\n");
    CHECK_THROWS_AS(load_presentation(in, "inline"), ParseError);
  }
  SUBCASE("unrecognized line") {
    std::istringstream in("a-generators: a1\nb-generators: b1\nfoo: bar\n");
    CHECK_THROWS_WITH_AS(load_presentation(in, "inline"),
                         "inline:3: unrecognized line", ParseError);
  }
  SUBCASE("repeated header") {
    std::istringstream in("a-generators: a1\na-generators: a2\n");
    CHECK_THROWS_AS(load_presentation(in, "inline"), ParseError);
  }
}

}  // TEST_SUITE
