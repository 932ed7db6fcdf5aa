#pragma once

// Words over a two-family generating set.  Generators come in an "a" family
// (horizontal) and a "b" family (vertical); a word is a sequence of signed
// letters.  Everything in this header is a value type with no hidden state.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sqc {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownGeneratorError : Error {
  explicit UnknownGeneratorError(const std::string& msg) : Error(msg) {}
};

struct DuplicateGeneratorError : Error {
  explicit DuplicateGeneratorError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

enum class Family : unsigned char { A, B };

// A single signed letter.  `index` is the 0-based position of the generator
// inside its family's name list; `sign` is +1 or -1.
struct Letter {
  Family family;
  int index;
  int sign;

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return Letter{l.family, l.index, -l.sign}; }

// Immutable two-family alphabet.  Names must consist of a lowercase letter
// followed by digits, and must be distinct across both families.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::vector<std::string> a_names, std::vector<std::string> b_names);

  const std::vector<std::string>& names(Family f) const {
    return f == Family::A ? a_names_ : b_names_;
  }
  int family_size(Family f) const {
    return static_cast<int>(names(f).size());
  }
  int total_generators() const {
    return family_size(Family::A) + family_size(Family::B);
  }

  // Base name of a letter, ignoring its sign.
  const std::string& name_of(Letter l) const;

  // Looks up a base (lowercase) name.  Returns a positive letter.
  const Letter* find_base(std::string_view base_name) const;

  friend bool operator==(const Alphabet& x, const Alphabet& y) {
    return x.a_names_ == y.a_names_ && x.b_names_ == y.b_names_;
  }

 private:
  std::vector<std::string> a_names_;
  std::vector<std::string> b_names_;
  std::unordered_map<std::string, Letter> by_name_;
};

struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  auto begin() const { return letters.begin(); }
  auto end() const { return letters.end(); }

  friend bool operator==(const Word&, const Word&) = default;
};

// Image of a word in Z/2 x Z/2: one coordinate per family, counting letters
// of that family mod 2 (a signed letter and its inverse contribute equally).
struct ParityVector {
  int a_parity = 0;
  int b_parity = 0;

  friend bool operator==(const ParityVector&, const ParityVector&) = default;
};

// Parses whitespace-separated tokens.  A token is a generator name ("a2"),
// the name with its first character uppercased ("A2", the inverse), or the
// name followed by "^-1" ("a2^-1", also the inverse).
Word parse_word(std::string_view text, const Alphabet& alphabet);

// Canonical token form: inverse letters are printed with the first character
// uppercased, tokens joined by single spaces.  The empty word prints as "".
std::string word_to_string(const Word& w, const Alphabet& alphabet);

Word free_reduce(Word w);
bool is_freely_reduced(const Word& w);
Word invert_word(const Word& w);
Word concat(const Word& x, const Word& y);

ParityVector parity_image(const Word& w);

}  // namespace sqc
