#pragma once

// Square structures extracted from length-four alternating relators.
//
// A relator x1 y1 x2 y2 (x's horizontal, y's vertical) is read as a square
// whose four corners give the relations
//
//   x1 y1 = y2^-1 x2^-1      x2 y2 = y1^-1 x1^-1
//   x2^-1 y1^-1 = y2 x1      x1^-1 y2^-1 = y1 x2
//
// The structure is complete when every signed pair (a, b) appears in exactly
// one corner, which pins down a unique pair (a~, b~) with a b = b~ a~.  That
// bijection, read in all four orientations, drives the rewriting system that
// pushes vertical letters to the right of horizontal ones.

#include <string>
#include <utility>
#include <vector>

#include "sqc/presentation.hpp"
#include "sqc/words.hpp"

namespace sqc {

struct DuplicateCorner {
  Letter a;
  Letter b;
  std::vector<int> relators;  // 0-based indices of the colliding relators
};

struct VhtReport {
  bool complete = false;
  int square_count = 0;
  int corner_pairs_seen = 0;
  std::vector<DuplicateCorner> duplicates;
  std::vector<std::pair<Letter, Letter>> missing;
};

struct IncompleteSquaresError : Error {
  std::vector<std::pair<Letter, Letter>> missing;
  explicit IncompleteSquaresError(const std::string& msg,
                                  std::vector<std::pair<Letter, Letter>> m)
      : Error(msg), missing(std::move(m)) {}
};

struct AmbiguousSquaresError : Error {
  std::vector<DuplicateCorner> duplicates;
  explicit AmbiguousSquaresError(const std::string& msg,
                                 std::vector<DuplicateCorner> d)
      : Error(msg), duplicates(std::move(d)) {}
};

struct NotPureAError : Error {
  explicit NotPureAError(const std::string& msg) : Error(msg) {}
};

// Diagnostic pass over the relators; never throws for well-formed length-four
// alternating relators.
VhtReport vh_t_report(const Presentation& p);

class SquareStructure;

// Free-function spelling of SquareStructure::build.
SquareStructure build_square_structure(const Presentation& p);

class SquareStructure {
 public:
  // Throws AmbiguousSquaresError or IncompleteSquaresError when the relators
  // do not define a complete structure, so an instance is always total.
  static SquareStructure build(const Presentation& p);

  const Alphabet& alphabet() const { return alphabet_; }
  int m() const { return m_; }  // a-family size
  int n() const { return n_; }  // b-family size
  int square_count() const { return square_count_; }

  // a b = b~ a~; returns (a~, b~).
  std::pair<Letter, Letter> table_ab(Letter a, Letter b) const;
  // b a = a' b'; returns (a', b').
  std::pair<Letter, Letter> table_ba(Letter b, Letter a) const;
  // Inverse lookup of table_ab: given (a~, b~) returns (a, b).
  std::pair<Letter, Letter> table_ab_inv(Letter a_t, Letter b_t) const;
  // Inverse lookup of table_ba: given (a', b') returns (b, a).
  std::pair<Letter, Letter> table_ba_inv(Letter a_p, Letter b_p) const;

  // 0-based point of a signed letter: positive letters first, then inverses.
  int point_of(Letter l) const;
  Letter letter_at(Family fam, int point) const;

 private:
  SquareStructure() = default;

  Alphabet alphabet_;
  int m_ = 0;
  int n_ = 0;
  int square_count_ = 0;
  // Flat tables indexed by a-code * 2n + b-code, values packed the same way.
  std::vector<int> ab_;
  std::vector<int> ba_;
  std::vector<int> ab_inv_;
  std::vector<int> ba_inv_;
};

struct NormalForm {
  Word a_part;
  Word b_part;

  bool trivial() const { return a_part.empty() && b_part.empty(); }
  Word as_word() const { return concat(a_part, b_part); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Which vertical-before-horizontal pair gets rewritten first.  Both
// strategies reach the same normal form; the choice exists so that tests can
// compare them.
enum class RewriteStrategy { LeftmostInnermost, RightmostInnermost };

NormalForm normal_form(const SquareStructure& s, const Word& w,
                       RewriteStrategy strategy =
                           RewriteStrategy::LeftmostInnermost);

// normal_form(b^-1 u b) for a word u with only a-family letters.
NormalForm conjugate_by_vertical(const SquareStructure& s, const Word& u,
                                 Letter b);

bool is_trivial_element(const SquareStructure& s, const Word& w);

}  // namespace sqc
