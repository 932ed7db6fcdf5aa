#pragma once

// End-to-end verification of the catalog groups: the structural checks, the
// kernel and quotient computations, and the certificates that tie them
// together.  A certificate separates what this code checked from what is
// quoted out of the literature, and its verdict depends only on the checks.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sqc/cosets.hpp"
#include "sqc/local_groups.hpp"
#include "sqc/presentation.hpp"
#include "sqc/squares.hpp"

namespace sqc {

// Ranks in the two-factor amalgam decomposition carried by the index-4
// parity kernel of an (m, n) square presentation: free factors of rank
// 2m - 1 meeting an edge group whose index in each factor is 2n.
struct AmalgamShape {
  int factor_rank = 0;
  int edge_rank = 0;
  int factor_index = 0;
};

AmalgamShape amalgam_shape(const Presentation& p);

// True iff the first twelve relators of gamma coincide letter for letter
// with the built-in (8,6) subcomplex presentation, stay inside its
// sub-alphabet {a1..a4, b1..b3}, and that presentation is itself a complete
// square structure.
bool embedding_check_W(const Presentation& gamma);

// Membership in the parity kernel: both coordinates of parity_image are 0.
bool kernel_membership(const Word& u);

// Conjugates every word of the set by every signed b-letter and requires an
// empty vertical part and a horizontal part equal, as a reduced word, to
// some member of the set.  The one-argument form uses the built-in signed
// set of ten words; an empty set passes vacuously.
bool aprime_closure_check(const SquareStructure& s);
bool aprime_closure_check(const SquareStructure& s,
                          const std::vector<Word>& aprime_signed);

// Subgroup generator words for the parity kernel over the transversal
// {1, a, b, ab} built on the first generator of each family: one word
// t x rep(t x)^-1 per transversal element t and positive generator x.
std::vector<Word> parity_kernel_schreier_words(const Presentation& p);

// Coset table of the parity kernel (expected index 4).
CosetTable kernel_coset_table(
    const Presentation& p, const EnumerationLimits& limits = {},
    EnumerationStrategy strategy = EnumerationStrategy::HltLookahead);

// All quantities entering the Euler-characteristic cross-check, computed
// from the presentation, its parity-kernel table, and the rewritten
// subgroup presentation.
struct EulerFacts {
  int base_euler = 0;           // 1 - generators + relators
  int kernel_index = 0;
  int subgroup_generators = 0;  // of the rewritten kernel presentation
  int subgroup_relators = 0;
  int cover_euler = 0;          // 1 - subgroup_generators + subgroup_relators
  AmalgamShape shape;
  int amalgam_euler = 0;        // 2(1 - factor_rank) - (1 - edge_rank)
  bool passed = false;
};

EulerFacts euler_facts(const Presentation& p,
                       const EnumerationLimits& limits = {});

// True iff the kernel index is 4, the rewritten counts match the covering
// formulas k·g - (k-1) and k·r, both cover and amalgam Euler characteristics
// equal kernel_index times the base one, and the factor index divides out
// exactly as (edge_rank - 1)/(factor_rank - 1).
bool euler_characteristics_check(const Presentation& p,
                                 const EnumerationLimits& limits = {});

// One verified claim.  status is "checked" for direct machine checks and
// "derived" for conclusions assembled from other facts in the same
// certificate; data carries the numbers the check produced.
struct FactRecord {
  std::string id;
  std::string statement;
  std::string status;
  bool passed = false;
  nlohmann::json data;
};

// A result quoted from the literature that the verdict does not depend on;
// quote restates the cited result in this artifact's own words.
struct PremiseRecord {
  std::string citation;
  std::string quote;
};

struct Certificate {
  std::string group;
  std::vector<FactRecord> facts;
  std::vector<PremiseRecord> external_premises;
  // "consistent_with_paper" when every fact passed, otherwise
  // "discrepancy(<comma-separated fact ids>)".
  std::string verdict;
};

// Runs the whole pipeline for catalog group 1, 2 or 3.  Enumeration
// failures surface as failed facts, not exceptions.
Certificate theorem_report(int i, const EnumerationLimits& limits = {});

// Stable serialization: {group, facts[{id, statement, status, data}],
// external_premises[{citation, quote}], verdict} with data.passed carrying
// each fact's outcome.
nlohmann::json certificate_to_json(const Certificate& c);

}  // namespace sqc
