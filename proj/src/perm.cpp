#include "sqc/perm.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>

namespace sqc {

Permutation::Permutation(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v]) {
      throw Error("image list is not a permutation");
    }
    seen[v] = true;
  }
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatchError("cannot compose permutations of degrees " +
                              std::to_string(p.degree()) + " and " +
                              std::to_string(q.degree()));
  }
  std::vector<int> img(p.degree());
  for (int x = 0; x < p.degree(); ++x) img[x] = p.img_[q.img_[x]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(degree());
  for (int x = 0; x < degree(); ++x) img[img_[x]] = x;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (img_[x] != x) return false;
  }
  return true;
}

bool Permutation::is_even() const {
  // Parity is (degree - number of cycles) mod 2, counting fixed points.
  std::vector<bool> seen(degree(), false);
  int cycles = 0;
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (int y = x; !seen[y]; y = img_[y]) seen[y] = true;
  }
  return (degree() - cycles) % 2 == 0;
}

Permutation Permutation::parse_cycles(std::string_view text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw ParseError("expected '(' in cycle notation");
    }
    ++pos;
    std::vector<int> cycle;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      if (!cycle.empty()) {
        if (text[pos] != ',') {
          throw ParseError("expected ',' between cycle points");
        }
        ++pos;
        skip_space();
      }
      std::size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos == start) {
        throw ParseError("expected a point number in cycle notation");
      }
      int point = std::stoi(std::string(text.substr(start, pos - start)));
      if (point < 1 || point > degree) {
        throw PointOutOfRangeError("point " + std::to_string(point) +
                                   " outside 1.." + std::to_string(degree));
      }
      if (used[point - 1]) {
        throw RepeatedPointError("point " + std::to_string(point) +
                                 " appears twice");
      }
      used[point - 1] = true;
      cycle.push_back(point - 1);
      skip_space();
    }
    if (pos >= text.size()) {
      throw ParseError("unterminated cycle");
    }
    ++pos;  // ')'
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      img[cycle[i]] = cycle[i + 1];
    }
    if (cycle.size() > 1) img[cycle.back()] = cycle.front();
    skip_space();
  }
  return Permutation(std::move(img));
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    out += '(';
    int y = x;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(y + 1);
      seen[y] = true;
      y = img_[y];
      first = false;
    } while (y != x);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace detail {

namespace {

int smallest_moved_point(const Permutation& g) {
  for (int x = 0; x < g.degree(); ++x) {
    if (g.image(x) != x) return x;
  }
  return -1;
}

}  // namespace

StabChain::StabChain(int degree, const std::vector<Permutation>& gens,
                     std::vector<int> seed_base)
    : degree_(degree) {
  for (int p : seed_base) add_level(p);

  std::vector<Permutation> working;
  for (const Permutation& g : gens) {
    if (g.degree() != degree_) {
      throw DegreeMismatchError("generator degree " +
                                std::to_string(g.degree()) +
                                " does not match group degree " +
                                std::to_string(degree_));
    }
    if (!g.is_identity()) working.push_back(g);
  }

  // Make sure every generator moves some base point, then file it into each
  // level whose previous base points it fixes.
  for (const Permutation& g : working) {
    bool fixes_all = true;
    for (const ChainLevel& level : levels_) {
      if (g.image(level.base_point) != level.base_point) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) add_level(smallest_moved_point(g));
  }
  for (const Permutation& g : working) {
    for (ChainLevel& level : levels_) {
      level.gens.push_back(g);
      if (g.image(level.base_point) != level.base_point) break;
    }
  }
  for (ChainLevel& level : levels_) recompute_orbit(level);

  // Bottom-up verification in the Schreier-Sims style: every Schreier
  // generator of a level must sift to the identity through the levels below
  // it; a non-trivial residue becomes a new strong generator.
  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t li = i - 1;
    bool restart = false;
    // add_level may reallocate levels_, so index it afresh on every access
    // and copy the small permutations involved in each Schreier generator.
    for (std::size_t oi = 0; !restart && oi < levels_[li].orbit.size();
         ++oi) {
      for (std::size_t xi = 0; !restart && xi < levels_[li].gens.size();
           ++xi) {
        int beta = levels_[li].orbit[oi];
        Permutation u_beta = levels_[li].transversal[oi];
        Permutation x = levels_[li].gens[xi];
        int delta = x.image(beta);
        Permutation u_delta =
            levels_[li].transversal[levels_[li].slot[delta]];
        Permutation schreier = u_delta.inverse() * x * u_beta;
        if (schreier.is_identity()) continue;
        auto [residue, j] = strip(std::move(schreier), li + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) add_level(smallest_moved_point(residue));
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          recompute_orbit(levels_[l]);
        }
        i = j + 1;
        restart = true;
      }
    }
    if (!restart) --i;
  }
}

void StabChain::add_level(int point) {
  if (point < 0 || point >= degree_) {
    throw PointOutOfRangeError("base point " + std::to_string(point) +
                               " outside the degree");
  }
  ChainLevel level;
  level.base_point = point;
  levels_.push_back(std::move(level));
  recompute_orbit(levels_.back());
}

void StabChain::recompute_orbit(ChainLevel& level) const {
  level.orbit.assign(1, level.base_point);
  level.slot.assign(degree_, -1);
  level.slot[level.base_point] = 0;
  level.transversal.assign(1, Permutation(degree_));
  for (std::size_t qi = 0; qi < level.orbit.size(); ++qi) {
    int p = level.orbit[qi];
    for (const Permutation& x : level.gens) {
      int q = x.image(p);
      if (level.slot[q] < 0) {
        level.slot[q] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(q);
        level.transversal.push_back(x * level.transversal[qi]);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation g,
                                                     std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const ChainLevel& level = levels_[l];
    int delta = g.image(level.base_point);
    if (level.slot[delta] < 0) return {std::move(g), l};
    g = level.transversal[level.slot[delta]].inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

std::uint64_t StabChain::order() const {
  std::uint64_t result = 1;
  for (const ChainLevel& level : levels_) {
    std::uint64_t size = level.orbit.size();
    if (__builtin_mul_overflow(result, size, &result)) {
      throw Error("group order overflows 64 bits");
    }
  }
  return result;
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) {
    throw DegreeMismatchError("element degree does not match group degree");
  }
  auto [residue, level] = strip(g, 0);
  return level == levels_.size() && residue.is_identity();
}

}  // namespace detail

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Permutation& g : gens_) {
    if (g.degree() != degree_) {
      throw DegreeMismatchError("generator degree " +
                                std::to_string(g.degree()) +
                                " does not match group degree " +
                                std::to_string(degree_));
    }
  }
}

const detail::StabChain& PermGroup::chain() const {
  if (!chain_) {
    chain_ = std::make_unique<detail::StabChain>(degree_, gens_);
  }
  return *chain_;
}

std::uint64_t PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Permutation& g) const {
  return chain().contains(g);
}

std::vector<std::vector<int>> PermGroup::orbit_partition() const {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(degree_, false);
  for (int start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit{start};
    seen[start] = true;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      for (const Permutation& g : gens_) {
        int q = g.image(orbit[qi]);
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool PermGroup::is_transitive() const {
  return orbit_partition().size() <= 1;
}

int PermGroup::pair_orbit_count() const {
  // Orbits of the action on ordered pairs of distinct points.
  int n = degree_;
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  auto id = [n](int x, int y) { return static_cast<std::size_t>(x) * n + y; };
  int count = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || seen[id(x, y)]) continue;
      ++count;
      std::vector<std::pair<int, int>> queue{{x, y}};
      seen[id(x, y)] = true;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [px, py] = queue[qi];
        for (const Permutation& g : gens_) {
          int qx = g.image(px), qy = g.image(py);
          if (!seen[id(qx, qy)]) {
            seen[id(qx, qy)] = true;
            queue.emplace_back(qx, qy);
          }
        }
      }
    }
  }
  return count;
}

bool PermGroup::is_k_transitive(int k) const {
  if (k == 1) return is_transitive();
  if (k == 2) return degree_ >= 2 && pair_orbit_count() == 1;
  throw Error("is_k_transitive supports k = 1 and k = 2 only");
}

PermGroup PermGroup::point_stabilizer(int point) const {
  if (point < 0 || point >= degree_) {
    throw PointOutOfRangeError("stabilizer point outside the degree");
  }
  // A fresh chain seeded with `point` as its first base point makes the
  // generators below the first level generate exactly the stabilizer.
  detail::StabChain seeded(degree_, gens_, {point});
  std::vector<Permutation> stab_gens;
  if (seeded.levels().size() > 1) stab_gens = seeded.levels()[1].gens;
  return PermGroup(degree_, std::move(stab_gens));
}

int PermGroup::suborbit_count() const {
  if (!is_transitive()) {
    throw NotTransitiveError("suborbit count requires a transitive group");
  }
  return static_cast<int>(point_stabilizer(0).orbit_partition().size());
}

}  // namespace sqc
