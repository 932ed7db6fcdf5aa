#include "sqc/words.hpp"

#include <cctype>

namespace sqc {

namespace {

bool valid_name(const std::string& name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> a_names,
                   std::vector<std::string> b_names)
    : a_names_(std::move(a_names)), b_names_(std::move(b_names)) {
  auto add_family = [&](const std::vector<std::string>& names, Family fam) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
      const std::string& name = names[i];
      if (!valid_name(name)) {
        throw Error("invalid generator name '" + name +
                    "' (expected a lowercase letter followed by digits)");
      }
      auto [it, inserted] = by_name_.emplace(name, Letter{fam, i, +1});
      if (!inserted) {
        throw DuplicateGeneratorError("duplicate generator name '" + name +
                                      "'");
      }
    }
  };
  add_family(a_names_, Family::A);
  add_family(b_names_, Family::B);
}

const std::string& Alphabet::name_of(Letter l) const {
  const auto& list = names(l.family);
  if (l.index < 0 || l.index >= static_cast<int>(list.size())) {
    throw Error("letter index out of range for alphabet");
  }
  return list[l.index];
}

const Letter* Alphabet::find_base(std::string_view base_name) const {
  auto it = by_name_.find(std::string(base_name));
  return it == by_name_.end() ? nullptr : &it->second;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word result;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    std::string token(text.substr(pos, end - pos));
    pos = end;

    std::string base = token;
    int sign = +1;
    if (base.size() > 3 && base.compare(base.size() - 3, 3, "^-1") == 0) {
      base = base.substr(0, base.size() - 3);
      sign = -1;
    } else if (std::isupper(static_cast<unsigned char>(base[0]))) {
      base[0] = static_cast<char>(
          std::tolower(static_cast<unsigned char>(base[0])));
      sign = -1;
    }
    const Letter* l = alphabet.find_base(base);
    if (l == nullptr) {
      throw UnknownGeneratorError("unknown generator token '" + token + "'");
    }
    result.letters.push_back(Letter{l->family, l->index, sign});
  }
  return result;
}

std::string word_to_string(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    std::string name = alphabet.name_of(l);
    if (l.sign < 0) {
      name[0] = static_cast<char>(
          std::toupper(static_cast<unsigned char>(name[0])));
    }
    out += name;
  }
  return out;
}

Word free_reduce(Word w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w) {
    if (!stack.empty() && stack.back() == inverse(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w.letters[i] == inverse(w.letters[i + 1])) return false;
  }
  return true;
}

Word invert_word(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(inverse(*it));
  }
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.letters.insert(out.letters.end(), y.letters.begin(), y.letters.end());
  return out;
}

ParityVector parity_image(const Word& w) {
  // The sign of a letter does not matter mod 2, so each letter contributes 1
  // to its family's coordinate.
  ParityVector v;
  for (const Letter& l : w) {
    if (l.family == Family::A) {
      v.a_parity ^= 1;
    } else {
      v.b_parity ^= 1;
    }
  }
  return v;
}

}  // namespace sqc
