#include "sqc/local_groups.hpp"

#include <utility>

namespace sqc {

namespace {

// Shared body of local_action and local_action_reversed.  `moved` is the
// family whose letters serve as points, `inducing` the other family.
LocalAction build_action(const SquareStructure& s, Side side, bool reversed) {
  Family moved = side == Side::Horizontal ? Family::A : Family::B;
  Family inducing = side == Side::Horizontal ? Family::B : Family::A;

  const Alphabet& alph = s.alphabet();
  int degree = 2 * alph.family_size(moved);

  std::vector<std::string> point_labels(degree);
  for (int p = 0; p < degree; ++p) {
    point_labels[p] = word_to_string(Word{{s.letter_at(moved, p)}}, alph);
  }

  std::vector<std::string> generator_labels;
  std::vector<Permutation> gens;
  for (int i = 0; i < alph.family_size(inducing); ++i) {
    Letter t{inducing, i, +1};
    std::vector<int> images(degree);
    std::vector<char> seen(degree, 0);
    for (int p = 0; p < degree; ++p) {
      Letter x = s.letter_at(moved, p);
      Letter y;
      if (side == Side::Horizontal) {
        y = reversed ? s.table_ab(x, t).first : s.table_ba(t, x).first;
      } else {
        y = reversed ? s.table_ba(x, t).second : s.table_ab(t, x).second;
      }
      int q = s.point_of(y);
      if (seen[q]) {
        throw Error("local action of " + alph.name_of(t) +
                    " is not a bijection");
      }
      seen[q] = 1;
      images[p] = q;
    }
    generator_labels.push_back(alph.name_of(t));
    gens.emplace_back(std::move(images));
  }

  return LocalAction{side, std::move(point_labels),
                     std::move(generator_labels),
                     PermGroup(degree, std::move(gens))};
}

std::uint64_t factorial_or_zero(int d) {
  std::uint64_t f = 1;
  for (int k = 2; k <= d; ++k) {
    if (__builtin_mul_overflow(f, static_cast<std::uint64_t>(k), &f)) {
      return 0;  // too large to compare against; caller treats as "not full"
    }
  }
  return f;
}

// Recorded generator lists, one block per (complex, side), five cycle
// expressions each, on points 1..10.
constexpr const char* kReferenceGamma1H[] = {
    "(7,8)(9,10)",
    "(1,2)(3,4)",
    "(1,2)(3,4)(7,8)(9,10)",
    "(1,8,4,5)(2,7,3,10)",
    "(1,9,4,8)(3,10,6,7)",
};
constexpr const char* kReferenceGamma2H[] = {
    "(7,8)(9,10)",
    "(1,2)(3,4)",
    "(1,2)(3,4)(7,8)(9,10)",
    "(1,8,4,9)(2,10,7,3)",
    "(1,9,8,6,4)(2,7,5,3,10)",
};
constexpr const char* kReferenceGamma3H[] = {
    "(5,6)(7,8)(9,10)",
    "(1,2)(3,4)",
    "(1,2)(3,4)(7,8)(9,10)",
    "(1,4,8,9,2,3,7,10)(5,6)",
    "(1,9,2,10)(3,5,7)(4,6,8)",
};
constexpr const char* kReferenceGamma1V[] = {
    "(1,2)(4,6,7,5)(8,10,9)",
    "(1,2,3)(4,5,7,6)(9,10)",
    "(1,2)(4,5,7,6)(8,10,9)",
    "(1,2,3)(4,6,7,5)(9,10)",
    "(1,3,10,8)(2,4,6,9,7,5)",
};
constexpr const char* kReferenceGamma2V[] = {
    "(1,2)(4,6)(8,10,9)",
    "(1,2,3)(5,7)(9,10)",
    "(1,2)(4,6,5,7)(8,10,9)",
    "(1,2,3)(4,6,5,7)(9,10)",
    "(1,2,4,3,10,9,7,8)(5,6)",
};
constexpr const char* kReferenceGamma3V[] = {
    "(1,2)(4,7,5,6)(8,10,9)",
    "(1,2,3)(4,7,5,6)(9,10)",
    "(1,2)(4,5,6,7)(8,10,9)",
    "(1,2,3)(4,5,6,7)(9,10)",
    "(1,7)(2,8)(3,9)(4,10)(5,6)",
};

}  // namespace

std::string to_string(Side side) {
  return side == Side::Horizontal ? "horizontal" : "vertical";
}

LocalAction local_action(const SquareStructure& s, Side side) {
  return build_action(s, side, false);
}

LocalAction local_action_reversed(const SquareStructure& s, Side side) {
  return build_action(s, side, true);
}

LocalAction horizontal_local_group(const SquareStructure& s) {
  return local_action(s, Side::Horizontal);
}

LocalAction vertical_local_group(const SquareStructure& s) {
  return local_action(s, Side::Vertical);
}

LocalClassification classify_local_group(const LocalAction& l) {
  const PermGroup& g = l.group;
  LocalClassification c;
  c.order = g.order();
  c.transitive = g.is_transitive();
  c.two_transitive = g.degree() >= 2 && g.is_k_transitive(2);
  c.suborbits = c.transitive ? g.suborbit_count() : 0;

  std::uint64_t full = factorial_or_zero(g.degree());
  c.is_symmetric = full != 0 && c.order == full;
  bool all_even = true;
  for (const Permutation& p : g.generators()) {
    if (!p.is_even()) {
      all_even = false;
      break;
    }
  }
  c.is_alternating = full != 0 && all_even && c.order * 2 == full;
  return c;
}

std::vector<Permutation> reference_local_generators(CatalogName which,
                                                    Side side) {
  const char* const* block = nullptr;
  switch (which) {
    case CatalogName::Gamma1:
      block = side == Side::Horizontal ? kReferenceGamma1H : kReferenceGamma1V;
      break;
    case CatalogName::Gamma2:
      block = side == Side::Horizontal ? kReferenceGamma2H : kReferenceGamma2V;
      break;
    case CatalogName::Gamma3:
      block = side == Side::Horizontal ? kReferenceGamma3H : kReferenceGamma3V;
      break;
    case CatalogName::WiseW:
      throw Error("no reference generator list recorded for " +
                  to_string(which));
  }
  std::vector<Permutation> out;
  for (int i = 0; i < 5; ++i) {
    out.push_back(Permutation::parse_cycles(block[i], 10));
  }
  return out;
}

bool matches_reference_group(const PermGroup& g,
                             const std::vector<Permutation>& reference) {
  for (const Permutation& p : reference) {
    if (p.degree() != g.degree()) return false;
  }
  PermGroup ref(g.degree(), reference);
  if (ref.order() != g.order()) return false;
  for (const Permutation& p : reference) {
    if (!g.contains(p)) return false;
  }
  return true;
}

}  // namespace sqc
