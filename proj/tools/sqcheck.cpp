// sqcheck: command-line front end for the square-complex verification
// library.  Every command is a thin adapter: it loads a presentation,
// calls the library, formats the result, and picks an exit code.
//
//   exit 0  the requested check passed / the computation succeeded
//   exit 1  a check failed (incomplete structure, discrepancy, mismatch,
//           or an enumeration that hit its bounds)
//   exit 2  usage or input errors

#include <cstddef>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqc/analysis.hpp"

namespace {

std::string letter_str(sqc::Letter l, const sqc::Alphabet& alph) {
  return sqc::word_to_string(sqc::Word{{l}}, alph);
}

struct Target {
  sqc::Presentation presentation;
  std::optional<sqc::CatalogName> catalog;
};

Target resolve_target(const std::string& name) {
  Target t;
  try {
    sqc::CatalogName which = sqc::catalog_name_from_string(name);
    t.presentation = sqc::builtin_presentation(which);
    t.catalog = which;
  } catch (const sqc::UnknownCatalogNameError&) {
    t.presentation = sqc::load_presentation(std::filesystem::path(name));
  }
  return t;
}

int cmd_verify(const sqc::Presentation& p, bool json) {
  sqc::ValidationReport val = sqc::validate_presentation(p);
  sqc::VhtReport vr = sqc::vh_t_report(p);
  bool passed = val.problems.empty() && vr.complete;

  if (json) {
    nlohmann::json out;
    out["complete"] = vr.complete;
    out["square_count"] = vr.square_count;
    out["corner_pairs"] = vr.corner_pairs_seen;
    out["problems"] = val.problems;
    out["missing"] = nlohmann::json::array();
    for (const auto& [a, b] : vr.missing) {
      out["missing"].push_back(nlohmann::json::array(
          {letter_str(a, p.alphabet), letter_str(b, p.alphabet)}));
    }
    out["duplicates"] = nlohmann::json::array();
    for (const sqc::DuplicateCorner& d : vr.duplicates) {
      nlohmann::json jd;
      jd["a"] = letter_str(d.a, p.alphabet);
      jd["b"] = letter_str(d.b, p.alphabet);
      jd["relators"] = d.relators;
      out["duplicates"].push_back(std::move(jd));
    }
    out["passed"] = passed;
    std::cout << out.dump(2) << "\n";
    return passed ? 0 : 1;
  }

  for (const std::string& problem : val.problems) {
    std::cout << "problem: " << problem << "\n";
  }
  std::cout << vr.square_count << " squares, " << vr.corner_pairs_seen
            << " corner pairs, " << (vr.complete ? "complete" : "incomplete")
            << "\n";
  if (!vr.missing.empty()) {
    std::cout << "missing corner pairs (" << vr.missing.size() << "):\n";
    for (const auto& [a, b] : vr.missing) {
      std::cout << "  (" << letter_str(a, p.alphabet) << ", "
                << letter_str(b, p.alphabet) << ")\n";
    }
  }
  if (!vr.duplicates.empty()) {
    std::cout << "ambiguous corner pairs (" << vr.duplicates.size() << "):\n";
    for (const sqc::DuplicateCorner& d : vr.duplicates) {
      std::cout << "  (" << letter_str(d.a, p.alphabet) << ", "
                << letter_str(d.b, p.alphabet) << ") in relators";
      for (int r : d.relators) std::cout << " " << (r + 1);
      std::cout << "\n";
    }
  }
  return passed ? 0 : 1;
}

int cmd_local_groups(const Target& t, const std::string& side_flag,
                     bool strict, bool json) {
  sqc::SquareStructure s = sqc::SquareStructure::build(t.presentation);

  std::vector<sqc::Side> sides;
  if (side_flag.empty() || side_flag == "h") {
    sides.push_back(sqc::Side::Horizontal);
  }
  if (side_flag.empty() || side_flag == "v") {
    sides.push_back(sqc::Side::Vertical);
  }

  bool all_matched = true;
  nlohmann::json out;
  for (sqc::Side side : sides) {
    sqc::LocalAction la = sqc::local_action(s, side);
    sqc::LocalClassification c = sqc::classify_local_group(la);

    std::optional<bool> matches;
    if (strict) {
      // Only the three full catalog complexes carry a recorded list; for
      // anything else the flag cannot be honored.
      matches = sqc::matches_reference_group(
          la.group, sqc::reference_local_generators(*t.catalog, side));
      all_matched = all_matched && *matches;
    }

    if (json) {
      nlohmann::json js;
      js["order"] = c.order;
      js["transitive"] = c.transitive;
      js["two_transitive"] = c.two_transitive;
      js["suborbit_count"] = c.suborbits;
      js["alternating"] = c.is_alternating;
      js["symmetric"] = c.is_symmetric;
      js["generators"] = nlohmann::json::array();
      for (std::size_t i = 0; i < la.generator_labels.size(); ++i) {
        nlohmann::json jg;
        jg["label"] = la.generator_labels[i];
        jg["cycles"] = la.group.generators()[i].to_cycle_string();
        js["generators"].push_back(std::move(jg));
      }
      if (matches) js["matches_reference"] = *matches;
      out[sqc::to_string(side)] = std::move(js);
    } else {
      std::cout << sqc::to_string(side) << ": order " << c.order << ", "
                << (c.transitive ? "transitive" : "intransitive") << ", "
                << (c.two_transitive ? "2-transitive" : "not 2-transitive")
                << ", suborbits " << c.suborbits;
      if (c.is_alternating) std::cout << ", alternating group";
      if (c.is_symmetric) std::cout << ", symmetric group";
      if (matches) {
        std::cout << ", reference generators "
                  << (*matches ? "matched" : "NOT matched");
      }
      std::cout << "\n";
      for (std::size_t i = 0; i < la.generator_labels.size(); ++i) {
        std::cout << "  " << la.generator_labels[i] << ": "
                  << la.group.generators()[i].to_cycle_string() << "\n";
      }
    }
  }
  if (json) std::cout << out.dump(2) << "\n";
  return all_matched ? 0 : 1;
}

int cmd_quotient(const sqc::Presentation& p,
                 const std::vector<std::string>& relator_args,
                 const sqc::EnumerationLimits& limits, bool json) {
  std::vector<sqc::Word> extra;
  extra.reserve(relator_args.size());
  for (const std::string& text : relator_args) {
    extra.push_back(sqc::parse_word(text, p.alphabet));
  }

  sqc::CosetTable t = sqc::quotient_table(p, extra, limits);
  nlohmann::json out;
  out["order"] = t.index();

  std::optional<sqc::QuotientReport> report;
  try {
    report = sqc::identify_small_group(t);
  } catch (const sqc::TooLargeError&) {
    // Order alone is still worth reporting.
  }

  if (report) {
    out["structure_tag"] = report->structure_tag;
    nlohmann::json orders = nlohmann::json::object();
    for (const auto& [ord, count] : report->element_orders) {
      orders[std::to_string(ord)] = count;
    }
    out["element_orders"] = std::move(orders);
    out["multiplication"] = report->multiplication;
  }

  if (json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "order " << t.index() << "\n";
    if (report) {
      std::cout << "structure: " << report->structure_tag << "\n";
      std::cout << "element orders:";
      for (const auto& [ord, count] : report->element_orders) {
        std::cout << " " << ord << ":" << count;
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_normal_form(const sqc::Presentation& p, const std::string& word_text,
                    bool json) {
  sqc::SquareStructure s = sqc::SquareStructure::build(p);
  sqc::Word w = sqc::parse_word(word_text, p.alphabet);
  sqc::NormalForm nf = sqc::normal_form(s, w);

  if (json) {
    nlohmann::json out;
    out["input"] = sqc::word_to_string(w, p.alphabet);
    out["a_part"] = sqc::word_to_string(nf.a_part, p.alphabet);
    out["b_part"] = sqc::word_to_string(nf.b_part, p.alphabet);
    out["normal_form"] = sqc::word_to_string(nf.as_word(), p.alphabet);
    out["trivial"] = nf.trivial();
    std::cout << out.dump(2) << "\n";
  } else {
    if (nf.trivial()) {
      std::cout << "(trivial)\n";
    } else {
      std::cout << sqc::word_to_string(nf.as_word(), p.alphabet) << "\n";
    }
  }
  return 0;
}

int cmd_certificate(int which, const sqc::EnumerationLimits& limits,
                    bool json) {
  sqc::Certificate cert = sqc::theorem_report(which, limits);
  if (json) {
    std::cout << sqc::certificate_to_json(cert).dump(2) << "\n";
  } else {
    std::cout << "certificate for " << cert.group << "\n";
    for (const sqc::FactRecord& f : cert.facts) {
      std::cout << (f.passed ? "[ ok ] " : "[FAIL] ") << f.id << " ("
                << f.status << "): " << f.statement << "\n";
    }
    std::cout << "premises quoted from the literature: "
              << cert.external_premises.size() << "\n";
    std::cout << "verdict: " << cert.verdict << "\n";
  }
  return cert.verdict == "consistent_with_paper" ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"structure checks for square-complex group presentations"};
  app.require_subcommand(1);

  bool json = false;
  bool strict = false;
  std::size_t max_cosets = sqc::EnumerationLimits{}.max_cosets;
  app.add_flag("--json", json, "emit structured JSON instead of text");
  app.add_option("--max-cosets", max_cosets,
                 "bound on live cosets during enumeration");
  app.add_flag("--strict-local-generators", strict,
               "require local groups to match the recorded generator lists");

  std::string verify_target;
  CLI::App* verify = app.add_subcommand(
      "verify", "check that a presentation defines a complete square set");
  verify->add_option("target", verify_target, "catalog name or file path")
      ->required();

  std::string lg_target;
  std::string lg_side;
  CLI::App* local_groups = app.add_subcommand(
      "local-groups", "classify the horizontal and vertical local groups");
  local_groups->add_option("target", lg_target, "catalog name or file path")
      ->required();
  local_groups->add_option("--side", lg_side, "restrict to one side")
      ->check(CLI::IsMember({"h", "v"}));

  std::string quot_target;
  std::vector<std::string> quot_relators;
  CLI::App* quotient = app.add_subcommand(
      "quotient", "enumerate the quotient by extra relators");
  quotient->add_option("target", quot_target, "catalog name or file path")
      ->required();
  quotient
      ->add_option("--add-relator", quot_relators,
                   "word to kill (repeatable)")
      ->required();

  std::string nf_target;
  std::string nf_word;
  CLI::App* normal_form = app.add_subcommand(
      "normal-form", "rewrite a word into horizontal-then-vertical form");
  normal_form->add_option("target", nf_target, "catalog name or file path")
      ->required();
  normal_form->add_option("word", nf_word, "word over the target's alphabet")
      ->required();

  int cert_which = 0;
  CLI::App* certificate = app.add_subcommand(
      "certificate", "run the full verification pipeline for one group");
  certificate->add_option("group", cert_which, "catalog group: 1, 2 or 3")
      ->required()
      ->check(CLI::Range(1, 3));

  for (CLI::App* sub :
       {verify, local_groups, quotient, normal_form, certificate}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  sqc::EnumerationLimits limits;
  limits.max_cosets = max_cosets;

  try {
    if (verify->parsed()) {
      return cmd_verify(resolve_target(verify_target).presentation, json);
    }
    if (local_groups->parsed()) {
      Target t = resolve_target(lg_target);
      if (strict &&
          (!t.catalog || *t.catalog == sqc::CatalogName::WiseW)) {
        std::cerr << "error: no reference generator list recorded for "
                  << lg_target << "\n";
        return 2;
      }
      return cmd_local_groups(t, lg_side, strict, json);
    }
    if (quotient->parsed()) {
      return cmd_quotient(resolve_target(quot_target).presentation,
                          quot_relators, limits, json);
    }
    if (normal_form->parsed()) {
      return cmd_normal_form(resolve_target(nf_target).presentation, nf_word,
                             json);
    }
    return cmd_certificate(cert_which, limits, json);
  } catch (const sqc::LimitExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sqc::IncompleteSquaresError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sqc::AmbiguousSquaresError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const sqc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int main(int argc, char** argv) { return run_cli(argc, argv); }
