#include "sqc/cosets.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace sqc {

namespace {

// Thrown by define() when the table is full; the driver decides whether a
// lookahead pass can make room or the run is over.
struct CapacityHit {};

}  // namespace

// Mutable enumeration state.  Cosets are numbered from 1; parent_ is a
// union-find forest where every merge points the larger number at the
// smaller one, so representatives are minimal and coset 1 never dies.
// tab_ holds one row per allocated coset with 0 meaning undefined, and obeys
// cell(c, x) == d  <=>  cell(d, x^1) == c for live cosets whenever no
// coincidence is in flight.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup,
             const EnumerationLimits& limits, EnumerationStrategy strategy)
      : alph_(p.alphabet),
        limits_(limits),
        felsch_(strategy == EnumerationStrategy::Felsch) {
    if (limits_.max_cosets == 0 || limits_.max_steps == 0) {
      throw Error("enumeration limits must be positive");
    }
    ncols_ = 2 * alph_.total_generators();
    for (const Word& r : p.relators) {
      if (!r.empty()) relators_.push_back(columns_of(r));
    }
    for (const Word& w : subgroup) {
      subgroup_.push_back(columns_of(w));
    }
    tab_.assign(static_cast<std::size_t>(ncols_), 0);
    parent_ = {0, 1};
    nalloc_ = 1;
    live_ = 1;
    total_defined_ = 1;
  }

  CosetTable run() {
    if (felsch_) {
      run_felsch();
    } else {
      run_hlt();
    }
    return finish();
  }

 private:
  std::vector<int> columns_of(const Word& w) const {
    std::vector<int> out;
    out.reserve(w.size());
    int m = alph_.family_size(Family::A);
    for (Letter l : w) {
      if (l.index < 0 || l.index >= alph_.family_size(l.family)) {
        throw Error("word uses a letter outside the presentation's alphabet");
      }
      int slot = l.family == Family::A ? l.index : m + l.index;
      out.push_back(2 * slot + (l.sign < 0 ? 1 : 0));
    }
    return out;
  }

  std::size_t idx(int c, int x) const {
    return static_cast<std::size_t>(c - 1) * static_cast<std::size_t>(ncols_) +
           static_cast<std::size_t>(x);
  }
  int cell(int c, int x) const { return tab_[idx(c, x)]; }
  int& cell_ref(int c, int x) { return tab_[idx(c, x)]; }

  bool alive(int c) const { return parent_[c] == c; }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int t = parent_[c];
      parent_[c] = r;
      c = t;
    }
    return r;
  }

  void bump_step() {
    if (++steps_ > limits_.max_steps) {
      throw LimitExceededError("enumeration exceeded the step limit");
    }
  }

  void set_cell(int c, int x, int d) {
    cell_ref(c, x) = d;
    cell_ref(d, x ^ 1) = c;
    if (felsch_) {
      dstack_.push_back({c, x});
      dstack_.push_back({d, x ^ 1});
    }
  }

  int define(int c, int x) {
    if (nalloc_ >= limits_.max_cosets ||
        nalloc_ >= static_cast<std::size_t>(
                       std::numeric_limits<int>::max() - 1)) {
      throw CapacityHit{};
    }
    bump_step();
    ++nalloc_;
    ++live_;
    ++total_defined_;
    tab_.resize(tab_.size() + static_cast<std::size_t>(ncols_), 0);
    int n = static_cast<int>(nalloc_);
    parent_.push_back(n);
    set_cell(c, x, n);
    return n;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    bump_step();
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    cqueue_.push_back(b);
  }

  // Identifies a with b and restores the table invariant by dismantling each
  // dead row and re-attaching its edges to representatives.
  void coincidence(int a, int b) {
    cqueue_.clear();
    std::size_t head = 0;
    merge(a, b);
    while (head < cqueue_.size()) {
      int e = cqueue_[head++];
      for (int x = 0; x < ncols_; ++x) {
        int f = cell(e, x);
        if (f == 0) continue;
        cell_ref(f, x ^ 1) = 0;
        int mu = rep(e);
        int nu = rep(f);
        if (int u = cell(mu, x); u != 0) {
          merge(nu, u);
        } else if (int v = cell(nu, x ^ 1); v != 0) {
          merge(mu, v);
        } else {
          set_cell(mu, x, nu);
        }
      }
    }
    collapsed_ = true;
  }

  // Traces w from alpha in both directions.  A complete trace that fails to
  // return to alpha merges the two ends; a gap of one cell is filled as a
  // forced deduction; a wider gap defines new cosets when fill is set and is
  // otherwise left alone.
  void scan(int alpha, const std::vector<int>& w, bool fill) {
    int f = alpha;
    int b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();
    for (;;) {
      while (i < j) {
        int d = cell(f, w[i]);
        if (d == 0) break;
        f = d;
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i) {
        int d = cell(b, w[j - 1] ^ 1);
        if (d == 0) break;
        b = d;
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set_cell(f, w[i], b);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  // Coincidence-only pass over the whole table; frees cosets but never
  // defines any.
  void lookahead() {
    for (int c = 1; c <= static_cast<int>(nalloc_); ++c) {
      if (!alive(c)) continue;
      for (const auto& r : relators_) {
        scan(c, r, false);
        if (!alive(c)) break;
      }
    }
  }

  // Renumbers live cosets down to 1..live preserving order and returns the
  // new number of `follow`'s representative.
  int compact(int follow) {
    std::vector<int> newnum(nalloc_ + 1, 0);
    int k = 0;
    for (int c = 1; c <= static_cast<int>(nalloc_); ++c) {
      if (alive(c)) newnum[c] = ++k;
    }
    int followed = newnum[rep(follow)];
    std::vector<int> fresh(static_cast<std::size_t>(k) *
                               static_cast<std::size_t>(ncols_),
                           0);
    for (int c = 1; c <= static_cast<int>(nalloc_); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < ncols_; ++x) {
        int d = cell(c, x);
        fresh[static_cast<std::size_t>(newnum[c] - 1) * ncols_ + x] =
            d == 0 ? 0 : newnum[rep(d)];
      }
    }
    tab_ = std::move(fresh);
    nalloc_ = static_cast<std::size_t>(k);
    live_ = nalloc_;
    parent_.resize(nalloc_ + 1);
    for (int c = 0; c <= k; ++c) parent_[c] = c;
    return followed;
  }

  // Runs a lookahead pass when the table is full; gives up unless it
  // strictly reduced the live count, otherwise compacts and carries on.
  int relieve_or_throw(int follow) {
    std::size_t before = live_;
    lookahead();
    if (live_ >= before) {
      throw LimitExceededError("enumeration needs more than " +
                               std::to_string(limits_.max_cosets) +
                               " cosets; index not determined");
    }
    return compact(follow);
  }

  void run_hlt() {
    for (const auto& w : subgroup_) {
      for (;;) {
        try {
          scan(1, w, true);
          break;
        } catch (const CapacityHit&) {
          relieve_or_throw(1);
        }
      }
    }
    int alpha = 1;
    while (alpha <= static_cast<int>(nalloc_)) {
      if (!alive(alpha)) {
        ++alpha;
        continue;
      }
      try {
        bool died = false;
        for (const auto& r : relators_) {
          scan(alpha, r, true);
          if (!alive(alpha)) {
            died = true;
            break;
          }
        }
        if (!died) {
          for (int x = 0; x < ncols_; ++x) {
            if (cell(alpha, x) == 0) define(alpha, x);
          }
        }
      } catch (const CapacityHit&) {
        alpha = relieve_or_throw(alpha);
        continue;
      }
      ++alpha;
    }
  }

  static std::vector<int> inverse_columns(std::vector<int> w) {
    std::reverse(w.begin(), w.end());
    for (int& x : w) x ^= 1;
    return w;
  }

  void add_rotations(const std::vector<int>& w) {
    for (std::size_t s = 0; s < w.size(); ++s) {
      std::vector<int> rot;
      rot.reserve(w.size());
      rot.insert(rot.end(), w.begin() + static_cast<std::ptrdiff_t>(s),
                 w.end());
      rot.insert(rot.end(), w.begin(),
                 w.begin() + static_cast<std::ptrdiff_t>(s));
      buckets_[static_cast<std::size_t>(rot[0])].push_back(std::move(rot));
    }
  }

  void build_buckets() {
    buckets_.assign(static_cast<std::size_t>(ncols_), {});
    for (const auto& r : relators_) {
      add_rotations(r);
      add_rotations(inverse_columns(r));
    }
    for (auto& b : buckets_) {
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
    }
  }

  // Closes every relator consequence of the entries on the deduction stack.
  void drain() {
    while (!dstack_.empty()) {
      auto [c, x] = dstack_.back();
      dstack_.pop_back();
      if (!alive(c)) continue;
      for (const auto& r : buckets_[static_cast<std::size_t>(x)]) {
        scan(c, r, false);
        if (!alive(c)) break;
      }
    }
  }

  void run_felsch() {
    build_buckets();
    try {
      for (const auto& w : subgroup_) {
        scan(1, w, true);
        drain();
      }
      int c = 1;
      int x = 0;
      collapsed_ = false;
      for (;;) {
        drain();
        if (collapsed_) {
          c = 1;
          x = 0;
          collapsed_ = false;
        }
        while (c <= static_cast<int>(nalloc_)) {
          if (!alive(c) || x >= ncols_) {
            ++c;
            x = 0;
            continue;
          }
          if (cell(c, x) != 0) {
            ++x;
            continue;
          }
          break;
        }
        if (c > static_cast<int>(nalloc_)) break;
        define(c, x);
      }
    } catch (const CapacityHit&) {
      throw LimitExceededError("enumeration needs more than " +
                               std::to_string(limits_.max_cosets) +
                               " cosets; index not determined");
    }
  }

  void audit() const {
    for (int c = 1; c <= static_cast<int>(nalloc_); ++c) {
      for (int x = 0; x < ncols_; ++x) {
        if (cell(c, x) == 0) {
          throw TableNotClosedError("internal: empty cell at coset " +
                                    std::to_string(c) + " after enumeration");
        }
      }
    }
    auto trace_cols = [&](int start, const std::vector<int>& w) {
      int cur = start;
      for (int x : w) cur = cell(cur, x);
      return cur;
    };
    for (int c = 1; c <= static_cast<int>(nalloc_); ++c) {
      for (const auto& r : relators_) {
        if (trace_cols(c, r) != c) {
          throw TableNotClosedError("internal: relator open at coset " +
                                    std::to_string(c));
        }
      }
    }
    for (const auto& w : subgroup_) {
      if (trace_cols(1, w) != 1) {
        throw TableNotClosedError(
            "internal: subgroup word does not fix coset 1");
      }
    }
  }

  CosetTable finish() {
    compact(1);
    audit();
    CosetTable t;
    t.alphabet_ = alph_;
    t.ncols_ = ncols_;
    t.rows_ = nalloc_;
    t.tab_ = tab_;
    t.total_defined_ = total_defined_;
    return t;
  }

  Alphabet alph_;
  EnumerationLimits limits_;
  bool felsch_ = false;
  int ncols_ = 0;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgroup_;

  std::vector<int> tab_;
  std::vector<int> parent_;
  std::size_t nalloc_ = 0;
  std::size_t live_ = 0;
  std::size_t total_defined_ = 0;
  std::size_t steps_ = 0;

  std::vector<int> cqueue_;
  std::vector<std::pair<int, int>> dstack_;
  std::vector<std::vector<std::vector<int>>> buckets_;
  bool collapsed_ = false;
};

Letter CosetTable::column_letter(int col) const {
  if (col < 0 || col >= ncols_) throw Error("column out of range");
  int slot = col / 2;
  int sign = col % 2 == 0 ? +1 : -1;
  int m = alphabet_.family_size(Family::A);
  if (slot < m) return Letter{Family::A, slot, sign};
  return Letter{Family::B, slot - m, sign};
}

int CosetTable::column_of(Letter l) const {
  if (l.index < 0 || l.index >= alphabet_.family_size(l.family)) {
    throw Error("letter outside the table's alphabet");
  }
  int slot = l.family == Family::A
                 ? l.index
                 : alphabet_.family_size(Family::A) + l.index;
  return 2 * slot + (l.sign < 0 ? 1 : 0);
}

int CosetTable::action_col(int coset, int col) const {
  if (coset < 1 || coset > static_cast<int>(rows_)) {
    throw Error("coset out of range");
  }
  if (col < 0 || col >= ncols_) throw Error("column out of range");
  return tab_[static_cast<std::size_t>(coset - 1) *
                  static_cast<std::size_t>(ncols_) +
              static_cast<std::size_t>(col)];
}

int CosetTable::action(int coset, Letter l) const {
  return action_col(coset, column_of(l));
}

int CosetTable::trace(int coset, const Word& w) const {
  int c = coset;
  for (Letter l : w) c = action(c, l);
  return c;
}

std::vector<Word> CosetTable::schreier_transversal() const {
  std::vector<Word> reps(rows_);
  std::vector<char> have(rows_ + 1, 0);
  std::vector<int> queue{1};
  have[1] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int c = queue[qi];
    for (int x = 0; x < ncols_; ++x) {
      int d = action_col(c, x);
      if (have[d]) continue;
      have[d] = 1;
      reps[d - 1] = reps[c - 1];
      reps[d - 1].letters.push_back(column_letter(x));
      queue.push_back(d);
    }
  }
  return reps;
}

std::string CosetTable::to_tsv() const {
  std::string out = "coset";
  for (int x = 0; x < ncols_; ++x) {
    out += '\t';
    out += word_to_string(Word{{column_letter(x)}}, alphabet_);
  }
  out += '\n';
  for (int c = 1; c <= static_cast<int>(rows_); ++c) {
    out += std::to_string(c);
    for (int x = 0; x < ncols_; ++x) {
      out += '\t';
      out += std::to_string(action_col(c, x));
    }
    out += '\n';
  }
  return out;
}

CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup,
                        const EnumerationLimits& limits,
                        EnumerationStrategy strategy) {
  Enumerator e(p, subgroup, limits, strategy);
  return e.run();
}

CosetTable quotient_table(const Presentation& p,
                          const std::vector<Word>& extra_relators,
                          const EnumerationLimits& limits,
                          EnumerationStrategy strategy) {
  Presentation q = p;
  q.relators.insert(q.relators.end(), extra_relators.begin(),
                    extra_relators.end());
  return todd_coxeter(q, {}, limits, strategy);
}

int normal_closure_index(const Presentation& p, const Word& u,
                         const EnumerationLimits& limits,
                         EnumerationStrategy strategy) {
  return quotient_table(p, {u}, limits, strategy).index();
}

QuotientReport identify_small_group(const CosetTable& t) {
  int k = t.index();
  if (k > 64) {
    throw TooLargeError("table has " + std::to_string(k) +
                        " cosets; identification is limited to 64");
  }
  std::vector<Word> reps = t.schreier_transversal();

  QuotientReport report;
  report.order = static_cast<std::uint64_t>(k);
  report.multiplication.assign(
      static_cast<std::size_t>(k),
      std::vector<int>(static_cast<std::size_t>(k), 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      report.multiplication[i][j] = t.trace(i + 1, reps[j]);
    }
  }

  const auto& mult = report.multiplication;
  for (int j = 0; j < k; ++j) {
    if (mult[0][j] != j + 1 || mult[j][0] != j + 1) {
      throw Error("internal: coset 1 does not act as the identity");
    }
  }
  for (int i = 0; i < k; ++i) {
    std::vector<char> row(k + 1, 0);
    std::vector<char> col(k + 1, 0);
    for (int j = 0; j < k; ++j) {
      int r = mult[i][j];
      int c = mult[j][i];
      if (r < 1 || r > k || row[r] || c < 1 || c > k || col[c]) {
        throw Error("internal: multiplication table is not a Latin square");
      }
      row[r] = 1;
      col[c] = 1;
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int l = 0; l < k; ++l) {
        if (mult[mult[i][j] - 1][l] != mult[i][mult[j][l] - 1]) {
          throw Error("internal: multiplication table is not associative");
        }
      }
    }
  }

  for (int e = 0; e < k; ++e) {
    int ord = 1;
    int cur = e;
    while (cur != 0) {
      cur = mult[cur][e] - 1;
      ++ord;
    }
    report.element_orders[ord] += 1;
  }

  if (k == 1) {
    report.structure_tag = "trivial";
  } else if (report.element_orders.count(k) != 0) {
    report.structure_tag = "cyclic_" + std::to_string(k);
  } else if (k == 4 && report.element_orders[2] == 3) {
    report.structure_tag = "klein_four";
  } else {
    report.structure_tag = "other_with_multiplication_table";
  }
  return report;
}

std::vector<Permutation> coset_permutation_rep(const CosetTable& t) {
  int g = t.alphabet().total_generators();
  int k = t.index();
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(g));
  for (int s = 0; s < g; ++s) {
    std::vector<int> images(static_cast<std::size_t>(k));
    for (int c = 1; c <= k; ++c) {
      images[c - 1] = t.action_col(c, 2 * s) - 1;
    }
    out.emplace_back(std::move(images));
  }
  return out;
}

Presentation reidemeister_schreier(const Presentation& p,
                                   const CosetTable& t) {
  int k = t.index();
  int g = p.alphabet.total_generators();
  int m = p.alphabet.family_size(Family::A);
  std::vector<Word> reps = t.schreier_transversal();

  auto slot_letter = [&](int s) {
    return s < m ? Letter{Family::A, s, +1} : Letter{Family::B, s - m, +1};
  };
  auto slot_of = [&](Letter l) {
    return l.family == Family::A ? l.index : m + l.index;
  };

  // Number the nontrivial transversal words coset-major; 0 marks pairs whose
  // word cancels completely (the spanning-tree edges).
  std::vector<int> gen_number(static_cast<std::size_t>(k) *
                                  static_cast<std::size_t>(g),
                              0);
  int count = 0;
  for (int c = 1; c <= k; ++c) {
    for (int s = 0; s < g; ++s) {
      Letter x = slot_letter(s);
      int d = t.action(c, x);
      Word u = reps[c - 1];
      u.letters.push_back(x);
      Word back = invert_word(reps[d - 1]);
      u.letters.insert(u.letters.end(), back.letters.begin(),
                       back.letters.end());
      if (!free_reduce(u).empty()) {
        gen_number[static_cast<std::size_t>(c - 1) * g + s] = ++count;
      }
    }
  }

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) {
    names.push_back("s" + std::to_string(i));
  }

  std::vector<Word> rels;
  rels.reserve(static_cast<std::size_t>(k) * p.relators.size());
  for (int c = 1; c <= k; ++c) {
    for (const Word& r : p.relators) {
      Word out;
      int cur = c;
      for (Letter l : r.letters) {
        int s = slot_of(l);
        if (l.sign > 0) {
          int id = gen_number[static_cast<std::size_t>(cur - 1) * g + s];
          if (id != 0) out.letters.push_back(Letter{Family::A, id - 1, +1});
          cur = t.action(cur, l);
        } else {
          int target = t.action(cur, l);
          int id = gen_number[static_cast<std::size_t>(target - 1) * g + s];
          if (id != 0) out.letters.push_back(Letter{Family::A, id - 1, -1});
          cur = target;
        }
      }
      if (cur != c) {
        throw TableNotClosedError("internal: relator open during rewriting");
      }
      rels.push_back(std::move(out));
    }
  }

  Presentation result;
  result.alphabet = Alphabet(std::move(names), {});
  result.relators = std::move(rels);
  return result;
}

}  // namespace sqc
