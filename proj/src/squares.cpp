#include "sqc/squares.hpp"

#include <cassert>
#include <map>

namespace sqc {

namespace {

struct TableBuilder {
  int m = 0;
  int n = 0;
  int squares = 0;
  // entry value, or -1 when unset; `owner` records the relator that set it.
  std::vector<int> ab, ba, ab_inv, ba_inv;
  std::vector<int> ab_owner;
  std::map<int, std::vector<int>> ab_collisions;  // key -> relator indices

  int acode(Letter l) const { return l.index + (l.sign < 0 ? m : 0); }
  int bcode(Letter l) const { return l.index + (l.sign < 0 ? n : 0); }
  int key(Letter a, Letter b) const { return acode(a) * 2 * n + bcode(b); }

  Letter a_of(int code) const {
    return Letter{Family::A, code % m, code < m ? +1 : -1};
  }
  Letter b_of(int code) const {
    return Letter{Family::B, code % n, code < n ? +1 : -1};
  }

  void set(std::vector<int>& table, int k, int value) {
    if (table[k] < 0) table[k] = value;
    // Collisions are tracked once, on the ab table; the four tables receive
    // one entry each per corner, so their collision patterns coincide.
  }

  void corner_ab(int relator, Letter a, Letter b, Letter at, Letter bt) {
    int k = key(a, b);
    if (ab[k] >= 0) {
      auto& list = ab_collisions[k];
      if (list.empty()) list.push_back(ab_owner[k]);
      list.push_back(relator);
    } else {
      ab[k] = key(at, bt);
      ab_owner[k] = relator;
      ab_inv[key(at, bt)] = k;
    }
  }

  void corner_ba(Letter b, Letter a, Letter ap, Letter bp) {
    int k = key(a, b);
    if (ba[k] < 0) {
      ba[k] = key(ap, bp);
      ba_inv[key(ap, bp)] = k;
    }
  }
};

// Rotates a length-four alternating relator so the first letter is in the a
// family.  Returns false if the relator does not have the required shape.
bool normalized_square(const Word& r, Letter out[4]) {
  if (r.size() != 4) return false;
  int start;
  if (r.letters[0].family == Family::A) {
    start = 0;
  } else {
    start = 1;
  }
  for (int i = 0; i < 4; ++i) {
    out[i] = r.letters[(start + i) % 4];
    Family expect = (i % 2 == 0) ? Family::A : Family::B;
    if (out[i].family != expect) return false;
  }
  return true;
}

TableBuilder build_tables(const Presentation& p) {
  TableBuilder t;
  t.m = p.alphabet.family_size(Family::A);
  t.n = p.alphabet.family_size(Family::B);
  int cells = 4 * t.m * t.n;
  t.ab.assign(cells, -1);
  t.ba.assign(cells, -1);
  t.ab_inv.assign(cells, -1);
  t.ba_inv.assign(cells, -1);
  t.ab_owner.assign(cells, -1);

  for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
    Letter l[4];
    if (!normalized_square(p.relators[ri], l)) {
      throw Error("relator " + std::to_string(ri + 1) +
                  " is not a length-four alternating word");
    }
    Letter x1 = l[0], y1 = l[1], x2 = l[2], y2 = l[3];
    ++t.squares;
    int ridx = static_cast<int>(ri);
    // x1 y1 x2 y2 = 1 read at each corner.
    t.corner_ab(ridx, x1, y1, inverse(x2), inverse(y2));
    t.corner_ab(ridx, x2, y2, inverse(x1), inverse(y1));
    t.corner_ab(ridx, inverse(x2), inverse(y1), x1, y2);
    t.corner_ab(ridx, inverse(x1), inverse(y2), x2, y1);
    t.corner_ba(y1, x2, inverse(x1), inverse(y2));
    t.corner_ba(y2, x1, inverse(x2), inverse(y1));
    t.corner_ba(inverse(y1), inverse(x1), x2, y2);
    t.corner_ba(inverse(y2), inverse(x2), x1, y1);
  }
  return t;
}

VhtReport report_from(const TableBuilder& t) {
  VhtReport rep;
  rep.square_count = t.squares;
  for (int k = 0; k < static_cast<int>(t.ab.size()); ++k) {
    Letter a = t.a_of(k / (2 * t.n));
    Letter b = t.b_of(k % (2 * t.n));
    if (t.ab[k] >= 0) {
      ++rep.corner_pairs_seen;
    } else {
      rep.missing.emplace_back(a, b);
    }
    auto it = t.ab_collisions.find(k);
    if (it != t.ab_collisions.end()) {
      rep.duplicates.push_back(DuplicateCorner{a, b, it->second});
    }
  }
  rep.complete = rep.duplicates.empty() && rep.missing.empty() &&
                 rep.corner_pairs_seen == 4 * t.m * t.n;
  return rep;
}

}  // namespace

VhtReport vh_t_report(const Presentation& p) {
  return report_from(build_tables(p));
}

SquareStructure build_square_structure(const Presentation& p) {
  return SquareStructure::build(p);
}

SquareStructure SquareStructure::build(const Presentation& p) {
  TableBuilder t = build_tables(p);
  VhtReport rep = report_from(t);
  if (!rep.duplicates.empty()) {
    throw AmbiguousSquaresError(
        "square structure is ambiguous: " +
            std::to_string(rep.duplicates.size()) +
            " corner pair(s) are covered by more than one relator",
        rep.duplicates);
  }
  if (!rep.missing.empty()) {
    throw IncompleteSquaresError(
        "square structure is incomplete: " +
            std::to_string(rep.missing.size()) +
            " corner pair(s) are not covered by any relator",
        rep.missing);
  }

  SquareStructure s;
  s.alphabet_ = p.alphabet;
  s.m_ = t.m;
  s.n_ = t.n;
  s.square_count_ = t.squares;
  s.ab_ = std::move(t.ab);
  s.ba_ = std::move(t.ba);
  s.ab_inv_ = std::move(t.ab_inv);
  s.ba_inv_ = std::move(t.ba_inv);
  return s;
}

namespace {

int acode(int m, Letter l) { return l.index + (l.sign < 0 ? m : 0); }

void require_family(Letter l, Family fam, const char* who) {
  if (l.family != fam) {
    throw Error(std::string(who) + ": letter has the wrong family");
  }
}

}  // namespace

int SquareStructure::point_of(Letter l) const {
  return acode(l.family == Family::A ? m_ : n_, l);
}

Letter SquareStructure::letter_at(Family fam, int point) const {
  int size = fam == Family::A ? m_ : n_;
  if (point < 0 || point >= 2 * size) {
    throw Error("letter point out of range");
  }
  return Letter{fam, point % size, point < size ? +1 : -1};
}

std::pair<Letter, Letter> SquareStructure::table_ab(Letter a, Letter b) const {
  require_family(a, Family::A, "table_ab");
  require_family(b, Family::B, "table_ab");
  int v = ab_[acode(m_, a) * 2 * n_ + acode(n_, b)];
  assert(v >= 0);
  return {letter_at(Family::A, v / (2 * n_)), letter_at(Family::B, v % (2 * n_))};
}

std::pair<Letter, Letter> SquareStructure::table_ba(Letter b, Letter a) const {
  require_family(a, Family::A, "table_ba");
  require_family(b, Family::B, "table_ba");
  int v = ba_[acode(m_, a) * 2 * n_ + acode(n_, b)];
  assert(v >= 0);
  return {letter_at(Family::A, v / (2 * n_)), letter_at(Family::B, v % (2 * n_))};
}

std::pair<Letter, Letter> SquareStructure::table_ab_inv(Letter a_t,
                                                        Letter b_t) const {
  require_family(a_t, Family::A, "table_ab_inv");
  require_family(b_t, Family::B, "table_ab_inv");
  int v = ab_inv_[acode(m_, a_t) * 2 * n_ + acode(n_, b_t)];
  assert(v >= 0);
  return {letter_at(Family::A, v / (2 * n_)), letter_at(Family::B, v % (2 * n_))};
}

std::pair<Letter, Letter> SquareStructure::table_ba_inv(Letter a_p,
                                                        Letter b_p) const {
  require_family(a_p, Family::A, "table_ba_inv");
  require_family(b_p, Family::B, "table_ba_inv");
  int v = ba_inv_[acode(m_, a_p) * 2 * n_ + acode(n_, b_p)];
  assert(v >= 0);
  return {letter_at(Family::B, v % (2 * n_)), letter_at(Family::A, v / (2 * n_))};
}

namespace {

// Sum over vertical letters of the number of horizontal letters to their
// right.  Each rewrite moves one horizontal letter past one vertical letter,
// and free reduction never increases the sum, so it strictly decreases.
long long rewrite_measure(const std::vector<Letter>& w) {
  long long total = 0;
  long long a_seen = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->family == Family::A) {
      ++a_seen;
    } else {
      total += a_seen;
    }
  }
  return total;
}

}  // namespace

NormalForm normal_form(const SquareStructure& s, const Word& w,
                       RewriteStrategy strategy) {
  std::vector<Letter> cur = free_reduce(w).letters;
#ifndef NDEBUG
  long long prev_measure = rewrite_measure(cur);
#endif
  for (;;) {
    int pos = -1;
    int len = static_cast<int>(cur.size());
    if (strategy == RewriteStrategy::LeftmostInnermost) {
      for (int i = 0; i + 1 < len; ++i) {
        if (cur[i].family == Family::B && cur[i + 1].family == Family::A) {
          pos = i;
          break;
        }
      }
    } else {
      for (int i = len - 2; i >= 0; --i) {
        if (cur[i].family == Family::B && cur[i + 1].family == Family::A) {
          pos = i;
          break;
        }
      }
    }
    if (pos < 0) break;
    auto [ap, bp] = s.table_ba(cur[pos], cur[pos + 1]);
    cur[pos] = ap;
    cur[pos + 1] = bp;
    cur = free_reduce(Word(std::move(cur))).letters;
#ifndef NDEBUG
    long long now = rewrite_measure(cur);
    assert(now < prev_measure);
    prev_measure = now;
#endif
  }

  // No vertical letter is followed by a horizontal one, so the word is a
  // horizontal prefix followed by a vertical suffix.
  NormalForm nf;
  std::size_t split = 0;
  while (split < cur.size() && cur[split].family == Family::A) ++split;
  nf.a_part.letters.assign(cur.begin(), cur.begin() + split);
  nf.b_part.letters.assign(cur.begin() + split, cur.end());
  for (const Letter& l : nf.b_part) {
    assert(l.family == Family::B);
    (void)l;
  }
  return nf;
}

NormalForm conjugate_by_vertical(const SquareStructure& s, const Word& u,
                                 Letter b) {
  for (const Letter& l : u) {
    if (l.family != Family::A) {
      throw NotPureAError(
          "conjugate_by_vertical expects a word with only a-family letters");
    }
  }
  require_family(b, Family::B, "conjugate_by_vertical");
  Word conj;
  conj.letters.push_back(inverse(b));
  conj.letters.insert(conj.letters.end(), u.letters.begin(), u.letters.end());
  conj.letters.push_back(b);
  return normal_form(s, conj);
}

bool is_trivial_element(const SquareStructure& s, const Word& w) {
  return normal_form(s, w).trivial();
}

}  // namespace sqc
