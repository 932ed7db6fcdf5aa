#pragma once

// Permutations on {0, ..., n-1} and permutation groups backed by a base and
// strong generating set.  Degrees stay small (at most 12 in practice), so the
// chain construction favours clarity and determinism over asymptotics.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqc/words.hpp"

namespace sqc {

struct RepeatedPointError : Error {
  explicit RepeatedPointError(const std::string& msg) : Error(msg) {}
};
struct PointOutOfRangeError : Error {
  explicit PointOutOfRangeError(const std::string& msg) : Error(msg) {}
};
struct DegreeMismatchError : Error {
  explicit DegreeMismatchError(const std::string& msg) : Error(msg) {}
};
struct NotTransitiveError : Error {
  explicit NotTransitiveError(const std::string& msg) : Error(msg) {}
};

class Permutation {
 public:
  explicit Permutation(int degree);             // identity
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int image(int point) const { return img_[point]; }

  // (p * q)(x) = p(q(x)); q is applied first.
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  Permutation inverse() const;
  bool is_identity() const;
  bool is_even() const;

  // Cycle notation with 1-based points, e.g. "(1,2)(3,4)".  The identity is
  // "()" and single-point cycles are accepted but never printed.
  static Permutation parse_cycles(std::string_view text, int degree);
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

namespace detail {

struct ChainLevel {
  int base_point = -1;
  std::vector<Permutation> gens;
  std::vector<int> orbit;                  // discovery order, orbit[0] = base
  std::vector<int> slot;                   // point -> index into orbit, or -1
  std::vector<Permutation> transversal;    // transversal[i](base) = orbit[i]
};

// Deterministic Schreier-Sims.  Base points are the smallest moved points,
// except for an optional seed placed first (used for point stabilizers).
class StabChain {
 public:
  StabChain(int degree, const std::vector<Permutation>& gens,
            std::vector<int> seed_base = {});

  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::uint64_t order() const;
  bool contains(const Permutation& g) const;

 private:
  void add_level(int point);
  void recompute_orbit(ChainLevel& level) const;
  // Sifts g through levels starting at `from`; returns the residue and the
  // level at which sifting stopped (levels_.size() on full success).
  std::pair<Permutation, std::size_t> strip(Permutation g,
                                            std::size_t from) const;

  int degree_;
  std::vector<ChainLevel> levels_;
};

}  // namespace detail

class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::uint64_t order() const;
  bool contains(const Permutation& g) const;

  // Orbits on points, each sorted, ordered by least element.
  std::vector<std::vector<int>> orbit_partition() const;
  bool is_transitive() const;
  // Supported for k = 1 and k = 2; the latter counts orbits on ordered pairs.
  bool is_k_transitive(int k) const;
  int pair_orbit_count() const;

  PermGroup point_stabilizer(int point) const;
  // Number of orbits of the stabilizer of point 0 (requires transitivity).
  int suborbit_count() const;

 private:
  // The chain is built once on first use.  Lazy construction mutates this
  // cache, so a PermGroup must not be shared across threads while queries
  // are in flight.
  const detail::StabChain& chain() const;

  int degree_;
  std::vector<Permutation> gens_;
  mutable std::unique_ptr<detail::StabChain> chain_;
};

// Free-function spellings of the two core queries.
inline std::uint64_t group_order(const PermGroup& g) { return g.order(); }
inline bool membership_test(const PermGroup& g, const Permutation& p) {
  return g.contains(p);
}

}  // namespace sqc
