#pragma once

// Finite presentations over a two-family alphabet, the built-in catalog of
// square presentations, and a small text file format for loading more.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqc/words.hpp"

namespace sqc {

struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;
  std::optional<std::string> name;
};

enum class CatalogName { Gamma1, Gamma2, Gamma3, WiseW };

struct UnknownCatalogNameError : Error {
  explicit UnknownCatalogNameError(const std::string& msg) : Error(msg) {}
};

// Accepts "gamma1", "gamma2", "gamma3", "wiseW" (case sensitive).
CatalogName catalog_name_from_string(std::string_view s);
std::string to_string(CatalogName n);

// The three 10-generator square presentations (25 relators each) and the
// 7-generator presentation on their twelve shared relators.
Presentation builtin_presentation(CatalogName n);

// Distinguished words over the 10-generator alphabet:
//   w        = a2 a1^-1 a3 a4^-1
//   aprime   = the five words (a1 a2^-1)^2, (a2^-1 a1)^2, (a3 a4^-1)^2,
//              (a4^-1 a3)^2, a5^4 (closed under inversion separately)
//   witness  = b1 b2^-1
struct CatalogConstants {
  Word w;
  std::vector<Word> aprime;
  Word witness;
};
CatalogConstants catalog_constants();

// The ten signed elements: the five aprime words and their inverses.
std::vector<Word> catalog_aprime_signed();

// Structural diagnostics for square presentations.  `problems` is empty iff
// every relator is freely and cyclically reduced, has length four, and
// alternates between the two families (up to rotation).
struct ValidationReport {
  int relator_count = 0;
  bool all_length_four = true;
  bool all_alternating = true;
  std::vector<std::pair<std::string, int>> generator_usage;
  std::vector<std::string> problems;
};
ValidationReport validate_presentation(const Presentation& p);

// Text format, one item per line:
//   a-generators: a1 a2 ...
//   b-generators: b1 b2 ...
//   relator: a1 b1 A2 B2
// Blank lines and lines starting with '#' are ignored.  Errors carry the
// 1-based line number.
Presentation load_presentation(std::istream& in, const std::string& origin);
Presentation load_presentation(const std::filesystem::path& path);
void save_presentation(const Presentation& p, std::ostream& out);
void save_presentation(const Presentation& p,
                       const std::filesystem::path& path);

}  // namespace sqc
