#pragma once

// Coset enumeration over a finite presentation.  Two drivers are provided:
// relator scanning with lookahead (the default) and a deduction-stack driver
// that closes every consequence of a definition before making the next one.
// Both finish with the same audited table semantics.
//
// Tables number cosets from 1 (the subgroup itself) in order of first
// definition, so a finished enumeration is reproducible bit for bit.
// Failure to finish within the limits throws; it never claims the index is
// infinite.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "sqc/perm.hpp"
#include "sqc/presentation.hpp"

namespace sqc {

struct LimitExceededError : Error {
  explicit LimitExceededError(const std::string& msg) : Error(msg) {}
};

// A finished table failed its final audit.  Indicates a defect in the
// enumerator itself, not in the input.
struct TableNotClosedError : Error {
  explicit TableNotClosedError(const std::string& msg) : Error(msg) {}
};

struct TooLargeError : Error {
  explicit TooLargeError(const std::string& msg) : Error(msg) {}
};

struct EnumerationLimits {
  // Upper bound on cosets ever defined, counting ones later found redundant.
  std::size_t max_cosets = 1'000'000;
  // Upper bound on definitions plus coincidence merges.
  std::size_t max_steps = std::numeric_limits<std::size_t>::max();
};

enum class EnumerationStrategy { HltLookahead, Felsch };

// Completed coset table.  Columns come in generator order (a-family then
// b-family), each generator followed by its inverse.  Cosets are 1-based;
// coset 1 is the subgroup.
class CosetTable {
 public:
  const Alphabet& alphabet() const { return alphabet_; }
  int index() const { return static_cast<int>(rows_); }
  int num_columns() const { return ncols_; }

  Letter column_letter(int col) const;
  int column_of(Letter l) const;

  int action(int coset, Letter l) const;
  int action_col(int coset, int col) const;
  // Applies the letters of w left to right.
  int trace(int coset, const Word& w) const;

  // Coset representatives found breadth first from coset 1 in column order;
  // result[0] is empty and result[c-1] traces coset 1 to coset c.
  std::vector<Word> schreier_transversal() const;

  // Tab-separated rendering with a header row, one row per coset.
  std::string to_tsv() const;

  // Cosets defined over the whole run, including collapsed ones.
  std::size_t total_defined() const { return total_defined_; }

 private:
  friend class Enumerator;
  CosetTable() = default;

  Alphabet alphabet_;
  int ncols_ = 0;
  std::size_t rows_ = 0;
  std::vector<int> tab_;  // rows_ * ncols_ entries, 1-based coset numbers
  std::size_t total_defined_ = 0;
};

// Enumerates the cosets of the subgroup generated by `subgroup` in the group
// presented by `p`.  Throws LimitExceededError when the run would exceed the
// limits; that outcome says nothing about whether the index is infinite.
CosetTable todd_coxeter(
    const Presentation& p, const std::vector<Word>& subgroup,
    const EnumerationLimits& limits = {},
    EnumerationStrategy strategy = EnumerationStrategy::HltLookahead);

// Table of the quotient by the normal closure of `extra_relators`: appends
// them to p's relators and enumerates over the trivial subgroup.
CosetTable quotient_table(
    const Presentation& p, const std::vector<Word>& extra_relators,
    const EnumerationLimits& limits = {},
    EnumerationStrategy strategy = EnumerationStrategy::HltLookahead);

// Index of the normal closure of u, read off quotient_table(p, {u}).
int normal_closure_index(
    const Presentation& p, const Word& u, const EnumerationLimits& limits = {},
    EnumerationStrategy strategy = EnumerationStrategy::HltLookahead);

// What a trivial-subgroup table turned out to be.  multiplication[i][j] is
// the 1-based element index of element (i+1) * (j+1), with coset 1 the
// identity; element_orders maps an element order to its multiplicity.
struct QuotientReport {
  std::uint64_t order = 0;
  // "trivial", "cyclic_<n>", "klein_four" or "other_with_multiplication_table"
  std::string structure_tag;
  std::map<int, int> element_orders;
  std::vector<std::vector<int>> multiplication;
};

// Reads the group structure off a table enumerated over the trivial
// subgroup.  Verifies the group axioms on the multiplication table and
// throws TooLargeError beyond 64 elements.
QuotientReport identify_small_group(const CosetTable& t);

// One permutation of {0, .., index-1} per positive generator (a-family then
// b-family), point c-1 mapping to action(c, gen)-1.
std::vector<Permutation> coset_permutation_rep(const CosetTable& t);

// Presentation of the subgroup the table was enumerated over, on generators
// s1..sN, obtained by rewriting the original relators along the table's
// breadth-first transversal.  One generator per (coset, positive generator)
// pair whose transversal word is not freely trivial, in coset-major order;
// one relator per (coset, relator) pair, kept unsimplified even when empty.
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t);

}  // namespace sqc
