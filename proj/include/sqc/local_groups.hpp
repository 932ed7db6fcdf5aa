#pragma once

// Permutation actions induced on the letters of one family by transporting
// them across squares.  Pushing a vertical letter b through a horizontal
// letter a (b a = a' b') maps a to a'; doing this for every a-letter gives
// one permutation per positive b-generator, and the group these generate is
// the horizontal local group.  Swapping the roles of the families gives the
// vertical one.

#include <cstdint>
#include <string>
#include <vector>

#include "sqc/perm.hpp"
#include "sqc/presentation.hpp"
#include "sqc/squares.hpp"

namespace sqc {

enum class Side { Horizontal, Vertical };

std::string to_string(Side side);

// A local group together with its point labelling.  Points are the signed
// letters of the acted-on family in SquareStructure::point_of order;
// generator_labels[i] names the letter that induced group.generators()[i].
struct LocalAction {
  Side side;
  std::vector<std::string> point_labels;
  std::vector<std::string> generator_labels;
  PermGroup group;
};

// Horizontal: point a maps to a' where b a = a' b', one permutation per
// positive b.  Vertical: point b maps to b~ where a b = b~ a~, one
// permutation per positive a.
LocalAction local_action(const SquareStructure& s, Side side);

// Side-specific spellings of local_action.
LocalAction horizontal_local_group(const SquareStructure& s);
LocalAction vertical_local_group(const SquareStructure& s);

// The same construction with the letter transported in the other direction:
// horizontally, a maps to a~ where a b = b~ a~; vertically, b maps to b'
// where b a = a' b'.  The result is conjugate to local_action's group by the
// letter-inversion involution, so order, transitivity and suborbit counts
// must agree between the two.
LocalAction local_action_reversed(const SquareStructure& s, Side side);

struct LocalClassification {
  std::uint64_t order = 0;
  bool transitive = false;
  bool two_transitive = false;
  // Orbit count of a point stabilizer; 0 when the group is intransitive.
  int suborbits = 0;
  bool is_alternating = false;  // the full alternating group on its points
  bool is_symmetric = false;    // the full symmetric group on its points
};

LocalClassification classify_local_group(const LocalAction& l);

// Published generator lists for the local groups of the built-in gamma
// complexes, in cycle notation on points 1..10.  The labelling behind these
// lists is not guaranteed to be point_of's, so agreement with local_action
// is a cross-check, not an identity; compare with matches_reference_group.
// Throws Error for catalog entries without a recorded list.
std::vector<Permutation> reference_local_generators(CatalogName which,
                                                    Side side);

// Whether g equals the group generated by `reference` as a subgroup of the
// symmetric group on g's points (same order and every reference generator a
// member).
bool matches_reference_group(const PermGroup& g,
                             const std::vector<Permutation>& reference);

}  // namespace sqc
