#include <map>
#include <vector>

#include "doctest.h"
#include "sqc/cosets.hpp"
#include "sqc/presentation.hpp"
#include "test_helpers.hpp"

using namespace sqc;
using test_util::w;

namespace {

Presentation one_gen(const char* relator) {
  Presentation p;
  p.alphabet = Alphabet({"a1"}, {});
  if (relator != nullptr && *relator != '\0') {
    p.relators.push_back(parse_word(relator, p.alphabet));
  }
  return p;
}

Presentation two_gen(std::initializer_list<const char*> relators) {
  Presentation p;
  p.alphabet = Alphabet({"a1", "a2"}, {});
  for (const char* r : relators) {
    p.relators.push_back(parse_word(r, p.alphabet));
  }
  return p;
}

void check_table_invariants(const Presentation& p,
                            const std::vector<Word>& subgroup,
                            const CosetTable& t) {
  for (int c = 1; c <= t.index(); ++c) {
    for (const Word& r : p.relators) CHECK(t.trace(c, r) == c);
    // Inverse columns really are inverses.
    for (int col = 0; col < t.num_columns(); ++col) {
      Letter l = t.column_letter(col);
      CHECK(t.action(t.action(c, l), inverse(l)) == c);
    }
  }
  for (const Word& u : subgroup) CHECK(t.trace(1, u) == 1);

  std::vector<Word> transversal = t.schreier_transversal();
  REQUIRE(static_cast<int>(transversal.size()) == t.index());
  CHECK(transversal[0].empty());
  for (int c = 1; c <= t.index(); ++c) {
    CHECK(t.trace(1, transversal[c - 1]) == c);
    CHECK(is_freely_reduced(transversal[c - 1]));
  }

  CHECK(t.total_defined() >= static_cast<std::size_t>(t.index()));
}

}  // namespace

TEST_SUITE("cosets") {

TEST_CASE("a cyclic quotient of order three") {
  Presentation p = one_gen("a1 a1 a1");
  CosetTable t = todd_coxeter(p, {});
  CHECK(t.index() == 3);
  CHECK(t.trace(1, w("a1 a1", p.alphabet)) == 3);
  CHECK(t.action(1, Letter{Family::A, 0, -1}) == 3);
  check_table_invariants(p, {}, t);

  std::vector<Permutation> rep = coset_permutation_rep(t);
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].to_cycle_string() == "(1,2,3)");
}

TEST_CASE("columns come in generator-inverse pairs") {
  Presentation p = builtin_presentation(CatalogName::Gamma1);
  CosetTable t = quotient_table(p, {catalog_constants().w});
  CHECK(t.num_columns() == 20);
  CHECK(t.column_letter(0) == Letter{Family::A, 0, +1});
  CHECK(t.column_letter(1) == Letter{Family::A, 0, -1});
  CHECK(t.column_letter(10) == Letter{Family::B, 0, +1});
  CHECK(t.column_of(Letter{Family::B, 0, +1}) == 10);
  CHECK(t.column_of(Letter{Family::B, 4, -1}) == 19);
  CHECK(t.alphabet() == p.alphabet);
}

TEST_CASE("subgroup enumeration inside a finite cyclic group") {
  Presentation p = one_gen("a1 a1 a1 a1");
  CosetTable t = todd_coxeter(p, {w("a1 a1", p.alphabet)});
  CHECK(t.index() == 2);
  check_table_invariants(p, {w("a1 a1", p.alphabet)}, t);

  Presentation sub = reidemeister_schreier(p, t);
  CHECK(sub.alphabet.family_size(Family::A) == 1);
  CHECK(sub.alphabet.names(Family::A)[0] == "s1");
  REQUIRE(sub.relators.size() == 2);
  CHECK(sub.relators[0] == parse_word("s1 s1", sub.alphabet));
  CHECK(sub.relators[1] == parse_word("s1 s1", sub.alphabet));
}

TEST_CASE("rewriting a presentation onto the trivial subgroup of order two") {
  Presentation p = one_gen("a1 a1");
  CosetTable t = todd_coxeter(p, {});
  CHECK(t.index() == 2);
  Presentation sub = reidemeister_schreier(p, t);
  CHECK(sub.alphabet.family_size(Family::A) == 1);
  REQUIRE(sub.relators.size() == 2);
  for (const Word& r : sub.relators) {
    CHECK(r == parse_word("s1", sub.alphabet));
  }
}

TEST_CASE("the even-length subgroup of a free group") {
  Presentation f2 = two_gen({});
  std::vector<Word> even = {w("a1 a1", f2.alphabet), w("a1 a2", f2.alphabet),
                            w("a2 A1", f2.alphabet)};
  CosetTable t = todd_coxeter(f2, even);
  CHECK(t.index() == 2);
  check_table_invariants(f2, even, t);

  Presentation sub = reidemeister_schreier(f2, t);
  CHECK(sub.alphabet.family_size(Family::A) == 3);
  CHECK(sub.alphabet.names(Family::A)[2] == "s3");
  CHECK(sub.relators.empty());
}

TEST_CASE("identify_small_group tags") {
  SUBCASE("trivial") {
    QuotientReport rep = identify_small_group(todd_coxeter(one_gen("a1"), {}));
    CHECK(rep.order == 1);
    CHECK(rep.structure_tag == "trivial");
  }
  SUBCASE("cyclic of order four") {
    QuotientReport rep =
        identify_small_group(quotient_table(one_gen("a1 a1 a1 a1"), {}));
    CHECK(rep.order == 4);
    CHECK(rep.structure_tag == "cyclic_4");
    CHECK(rep.element_orders == std::map<int, int>{{1, 1}, {2, 1}, {4, 2}});
  }
  SUBCASE("klein four") {
    Presentation p = two_gen({"a1 a1", "a2 a2", "a1 a2 a1 a2"});
    QuotientReport rep = identify_small_group(quotient_table(p, {}));
    CHECK(rep.order == 4);
    CHECK(rep.structure_tag == "klein_four");
    CHECK(rep.element_orders == std::map<int, int>{{1, 1}, {2, 3}});
  }
  SUBCASE("a nonabelian order six group keeps its table") {
    Presentation p = two_gen({"a1 a1", "a2 a2", "a1 a2 a1 a2 a1 a2"});
    QuotientReport rep = identify_small_group(quotient_table(p, {}));
    CHECK(rep.order == 6);
    CHECK(rep.structure_tag == "other_with_multiplication_table");
    CHECK(rep.element_orders == std::map<int, int>{{1, 1}, {2, 3}, {3, 2}});
    REQUIRE(rep.multiplication.size() == 6);
    for (int j = 0; j < 6; ++j) {
      CHECK(rep.multiplication[0][j] == j + 1);  // coset 1 is the identity
      CHECK(rep.multiplication[j][0] == j + 1);
    }
  }
  SUBCASE("too large to tabulate") {
    Presentation p = one_gen(nullptr);
    Word r;
    for (int i = 0; i < 100; ++i) {
      r.letters.push_back(Letter{Family::A, 0, +1});
    }
    p.relators.push_back(r);
    CHECK_THROWS_AS(identify_small_group(todd_coxeter(p, {})),
                    TooLargeError);
  }
}

TEST_CASE("quotients by the distinguished commutator word") {
  const Word u = catalog_constants().w;
  const int expected[3] = {4, 8, 4};
  for (int i = 0; i < 3; ++i) {
    Presentation p = builtin_presentation(static_cast<CatalogName>(i));
    CAPTURE(i);
    for (EnumerationStrategy strat :
         {EnumerationStrategy::HltLookahead, EnumerationStrategy::Felsch}) {
      CHECK(normal_closure_index(p, u, {}, strat) == expected[i]);
      CosetTable t = quotient_table(p, {u}, {}, strat);
      CHECK(t.index() == expected[i]);
      check_table_invariants(p, {}, t);
    }
  }

  QuotientReport q1 = identify_small_group(
      quotient_table(builtin_presentation(CatalogName::Gamma1), {u}));
  CHECK(q1.structure_tag == "klein_four");
  QuotientReport q3 = identify_small_group(
      quotient_table(builtin_presentation(CatalogName::Gamma3), {u}));
  CHECK(q3.structure_tag == "klein_four");
  QuotientReport q2 = identify_small_group(
      quotient_table(builtin_presentation(CatalogName::Gamma2), {u}));
  CHECK(q2.order == 8);
  CHECK(q2.element_orders.at(1) == 1);
  CHECK(q2.element_orders.at(2) == 7);  // elementary abelian of rank three
}

TEST_CASE("strategies produce identical tables on finite runs") {
  Presentation p = builtin_presentation(CatalogName::Gamma2);
  CosetTable hlt = quotient_table(p, {catalog_constants().w}, {},
                                  EnumerationStrategy::HltLookahead);
  CosetTable felsch = quotient_table(p, {catalog_constants().w}, {},
                                     EnumerationStrategy::Felsch);
  CHECK(hlt.index() == felsch.index());

  // Rerunning the same strategy reproduces the table bit for bit.
  CosetTable again = quotient_table(p, {catalog_constants().w}, {},
                                    EnumerationStrategy::HltLookahead);
  CHECK(hlt.to_tsv() == again.to_tsv());
}

TEST_CASE("tsv rendering") {
  CosetTable t = todd_coxeter(one_gen("a1 a1 a1"), {});
  std::string tsv = t.to_tsv();
  CHECK(tsv == t.to_tsv());
  int lines = 0;
  for (char c : tsv) lines += c == '\n';
  CHECK(lines == t.index() + 1);
  CHECK(tsv.find('\t') != std::string::npos);
}

TEST_CASE("enumeration limits") {
  Presentation f2 = two_gen({});

  SUBCASE("free groups never close over the trivial subgroup") {
    EnumerationLimits limits;
    limits.max_cosets = 1000;
    CHECK_THROWS_AS(todd_coxeter(f2, {}, limits), LimitExceededError);
    for (EnumerationStrategy strat :
         {EnumerationStrategy::HltLookahead, EnumerationStrategy::Felsch}) {
      CHECK_THROWS_AS(todd_coxeter(f2, {}, limits, strat),
                      LimitExceededError);
    }
  }

  SUBCASE("an infinite-index subgroup runs into the coset cap") {
    std::vector<Word> sub = {w("a1 a1", f2.alphabet), w("a1 a2", f2.alphabet)};
    EnumerationLimits limits;
    limits.max_cosets = 2000;
    CHECK_THROWS_AS(todd_coxeter(f2, sub, limits), LimitExceededError);
  }

  SUBCASE("a step budget cuts a finite run short") {
    Presentation p = builtin_presentation(CatalogName::Gamma1);
    EnumerationLimits limits;
    limits.max_steps = 5;
    CHECK_THROWS_AS(quotient_table(p, {catalog_constants().w}, limits),
                    LimitExceededError);
  }

  SUBCASE("a generous budget leaves the result alone") {
    Presentation p = builtin_presentation(CatalogName::Gamma1);
    EnumerationLimits limits;
    limits.max_cosets = 100000;
    CHECK(quotient_table(p, {catalog_constants().w}, limits).index() == 4);
  }
}

TEST_CASE("quotient by the generators is trivial") {
  Presentation f2 = two_gen({});
  CosetTable t =
      quotient_table(f2, {w("a1", f2.alphabet), w("a2", f2.alphabet)});
  CHECK(t.index() == 1);
}

}  // TEST_SUITE
