#include "sqc/presentation.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace sqc {

namespace {

// The twelve relators shared by all three 10-generator presentations.  They
// only use a1..a4 and b1..b3, which is what makes the 7-generator subgroup
// presentation below a sub-presentation of each of them.
const char* const kSharedRelators[12] = {
    "a1 b1 A2 B2", "a1 b2 A1 B1", "a1 b3 A2 B3", "a1 B3 A2 b2",
    "a1 B1 A2 b3", "a2 b2 A2 B1", "a3 b1 A4 B2", "a3 b2 A3 B1",
    "a3 b3 A4 B3", "a3 B3 A4 b2", "a3 B1 A4 b3", "a4 b2 A4 B1",
};

const char* const kGamma1Tail[13] = {
    "a1 b4 a2 B5", "a1 b5 A5 b4", "a1 B5 a3 B4", "a1 B4 a3 b5",
    "a2 b4 A2 b5", "a2 b5 a4 B4", "a3 b4 a4 b5", "a3 B5 a4 b4",
    "a4 B5 A5 B4", "a5 b1 A5 b3", "a5 b2 A5 B5", "a5 b3 A5 B1",
    "a5 b4 A5 B2",
};

const char* const kGamma2Tail[13] = {
    "a1 b4 A4 b5", "a1 b5 a2 B5", "a1 B5 a3 B4", "a1 B4 a2 b4",
    "a2 b5 A3 b4", "a2 B4 a4 B5", "a3 b4 a4 b4", "a3 b5 A5 b5",
    "a4 b5 a5 b5", "a5 b1 A5 b3", "a5 b2 A5 B1", "a5 b3 A5 B4",
    "a5 b4 A5 B2",
};

const char* const kGamma3Tail[13] = {
    "a1 b4 a1 b5", "a1 B5 a2 B5", "a1 B4 A4 B4", "a2 b4 a2 b5",
    "a2 B4 A3 B4", "a3 b5 a4 B4", "a3 B5 A5 B5", "a3 B4 a4 b5",
    "a4 B5 a5 B5", "a5 b1 a5 b4", "a5 b2 A5 b3", "a5 b3 A5 b2",
    "a5 B4 a5 B1",
};

Alphabet full_alphabet() {
  return Alphabet({"a1", "a2", "a3", "a4", "a5"},
                  {"b1", "b2", "b3", "b4", "b5"});
}

Presentation make_gamma(const char* const tail[13], const std::string& name) {
  Presentation p;
  p.alphabet = full_alphabet();
  p.name = name;
  for (const char* r : kSharedRelators) {
    p.relators.push_back(parse_word(r, p.alphabet));
  }
  for (int i = 0; i < 13; ++i) {
    p.relators.push_back(parse_word(tail[i], p.alphabet));
  }
  return p;
}

}  // namespace

CatalogName catalog_name_from_string(std::string_view s) {
  if (s == "gamma1") return CatalogName::Gamma1;
  if (s == "gamma2") return CatalogName::Gamma2;
  if (s == "gamma3") return CatalogName::Gamma3;
  if (s == "wiseW") return CatalogName::WiseW;
  throw UnknownCatalogNameError("unknown catalog name '" + std::string(s) +
                                "' (expected gamma1, gamma2, gamma3 or wiseW)");
}

std::string to_string(CatalogName n) {
  switch (n) {
    case CatalogName::Gamma1: return "gamma1";
    case CatalogName::Gamma2: return "gamma2";
    case CatalogName::Gamma3: return "gamma3";
    case CatalogName::WiseW: return "wiseW";
  }
  throw Error("invalid catalog name value");
}

Presentation builtin_presentation(CatalogName n) {
  switch (n) {
    case CatalogName::Gamma1: return make_gamma(kGamma1Tail, "gamma1");
    case CatalogName::Gamma2: return make_gamma(kGamma2Tail, "gamma2");
    case CatalogName::Gamma3: return make_gamma(kGamma3Tail, "gamma3");
    case CatalogName::WiseW: {
      Presentation p;
      p.alphabet =
          Alphabet({"a1", "a2", "a3", "a4"}, {"b1", "b2", "b3"});
      p.name = "wiseW";
      for (const char* r : kSharedRelators) {
        p.relators.push_back(parse_word(r, p.alphabet));
      }
      return p;
    }
  }
  throw Error("invalid catalog name value");
}

CatalogConstants catalog_constants() {
  Alphabet al = full_alphabet();
  CatalogConstants c;
  c.w = parse_word("a2 A1 a3 A4", al);
  c.aprime = {
      parse_word("a1 A2 a1 A2", al),
      parse_word("A2 a1 A2 a1", al),
      parse_word("a3 A4 a3 A4", al),
      parse_word("A4 a3 A4 a3", al),
      parse_word("a5 a5 a5 a5", al),
  };
  c.witness = parse_word("b1 B2", al);
  return c;
}

std::vector<Word> catalog_aprime_signed() {
  CatalogConstants c = catalog_constants();
  std::vector<Word> out;
  for (const Word& u : c.aprime) {
    out.push_back(u);
    out.push_back(invert_word(u));
  }
  return out;
}

ValidationReport validate_presentation(const Presentation& p) {
  ValidationReport rep;
  rep.relator_count = static_cast<int>(p.relators.size());

  std::map<std::pair<int, int>, int> usage;  // (family, index) -> count
  for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
    const Word& r = p.relators[ri];
    std::string label = "relator " + std::to_string(ri + 1);
    if (!is_freely_reduced(r)) {
      rep.problems.push_back(label + " is not freely reduced");
    }
    if (!r.empty() && r.letters.front() == inverse(r.letters.back())) {
      rep.problems.push_back(label + " is not cyclically reduced");
    }
    if (r.size() != 4) {
      rep.all_length_four = false;
      rep.problems.push_back(label + " has length " +
                             std::to_string(r.size()) + ", expected 4");
    }
    bool alternating = true;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      if (r.letters[i].family == r.letters[i + 1].family) alternating = false;
    }
    if (r.size() >= 2 &&
        r.letters.front().family == r.letters.back().family) {
      // Rotation closes the cycle, so the two families must also alternate
      // across the wrap-around position.
      alternating = false;
    }
    if (!alternating) {
      rep.all_alternating = false;
      rep.problems.push_back(label +
                             " does not alternate between the two families");
    }
    for (const Letter& l : r) {
      usage[{l.family == Family::A ? 0 : 1, l.index}] += 1;
    }
  }

  for (Family fam : {Family::A, Family::B}) {
    const auto& names = p.alphabet.names(fam);
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
      auto it = usage.find({fam == Family::A ? 0 : 1, i});
      rep.generator_usage.emplace_back(names[i],
                                       it == usage.end() ? 0 : it->second);
    }
  }
  return rep;
}

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Presentation load_presentation(std::istream& in, const std::string& origin) {
  std::optional<std::vector<std::string>> a_names;
  std::optional<std::vector<std::string>> b_names;
  std::vector<std::pair<int, std::string>> relator_lines;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = origin + ":" + std::to_string(lineno);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;

    auto starts_with = [&](const char* prefix) {
      return line.compare(first, std::string(prefix).size(), prefix) == 0;
    };
    if (starts_with("a-generators:")) {
      if (a_names) {
        throw ParseError(where + ": repeated a-generators line");
      }
      a_names = split_tokens(line.substr(first + 13));
    } else if (starts_with("b-generators:")) {
      if (b_names) {
        throw ParseError(where + ": repeated b-generators line");
      }
      b_names = split_tokens(line.substr(first + 13));
    } else if (starts_with("relator:")) {
      relator_lines.emplace_back(lineno, line.substr(first + 8));
    } else {
      throw ParseError(where + ": unrecognized line");
    }
  }

  if (!a_names || !b_names) {
    throw ParseError(origin + ": missing " +
                     (a_names ? "b-generators" : "a-generators") + " line");
  }

  Presentation p;
  try {
    p.alphabet = Alphabet(*a_names, *b_names);
  } catch (const DuplicateGeneratorError& e) {
    throw DuplicateGeneratorError(origin + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  for (const auto& [ln, text] : relator_lines) {
    try {
      p.relators.push_back(parse_word(text, p.alphabet));
    } catch (const UnknownGeneratorError& e) {
      throw UnknownGeneratorError(origin + ":" + std::to_string(ln) + ": " +
                                  e.what());
    }
  }
  return p;
}

Presentation load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open presentation file '" + path.string() + "'");
  }
  Presentation p = load_presentation(in, path.string());
  p.name = path.stem().string();
  return p;
}

void save_presentation(const Presentation& p, std::ostream& out) {
  auto emit_family = [&](const char* label, Family fam) {
    out << label << ":";
    for (const std::string& name : p.alphabet.names(fam)) out << ' ' << name;
    out << '\n';
  };
  if (p.name) out << "# " << *p.name << '\n';
  emit_family("a-generators", Family::A);
  emit_family("b-generators", Family::B);
  for (const Word& r : p.relators) {
    out << "relator: " << word_to_string(r, p.alphabet) << '\n';
  }
}

void save_presentation(const Presentation& p,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write presentation file '" + path.string() + "'");
  }
  save_presentation(p, out);
}

}  // namespace sqc
