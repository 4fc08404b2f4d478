// Command-line front end: braid-word evaluation, equality queries,
// presentation-relation verification, image-form reports and the golden
// self-test. Semantic answers (equal / not-equal, in form / not in form)
// are data and exit 0; malformed input exits 2; failed verification
// suites exit 1.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "loopbraid/json_io.hpp"
#include "loopbraid/loopbraid.hpp"

namespace {

using namespace loopbraid;

int run_eval(int rank, const std::string& word_text, bool json) {
  AggAutomorphism image = evaluate(parse_braid_word(word_text, rank));
  if (json)
    std::cout << to_json(image.forward()).dump(2) << "\n";
  else
    std::cout << to_string(image.forward());
  return 0;
}

int run_equal(int rank, const std::string& lhs, const std::string& rhs,
              bool json) {
  const bool eq =
      equal_in_group(parse_braid_word(lhs, rank), parse_braid_word(rhs, rank));
  if (json)
    std::cout << nlohmann::json{{"rank", rank}, {"equal", eq}}.dump(2) << "\n";
  else
    std::cout << (eq ? "equal" : "not-equal") << "\n";
  return 0;
}

int run_relations(int rank, bool json) {
  RelationReport report = verify_relations(rank);
  if (json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    for (const RelationCheck& check : report.checks) {
      std::cout << (check.passed ? "PASS " : "FAIL ")
                << instance_label(check.instance) << ": "
                << to_string(check.instance.lhs) << " = "
                << (check.instance.rhs.empty() ? "1"
                                               : to_string(check.instance.rhs))
                << "\n";
      if (!check.passed) std::cout << "     " << check.failure_detail << "\n";
    }
    std::cout << "relations for rank " << rank << ": "
              << (report.checks.size() - report.failed_count()) << "/"
              << report.checks.size() << " passed\n";
  }
  return report.all_passed() ? 0 : 1;
}

int run_check(int rank, const std::string& word_text, bool json) {
  AggAutomorphism image = evaluate(parse_braid_word(word_text, rank));
  const FreeGroupEndo& endo = image.forward().group_part();
  auto form = goldsmith_form(endo);
  auto [conjugating, boundary] = artin_conditions(endo);
  const bool flux = conserves_flux(image.forward());
  if (json) {
    nlohmann::json out{{"rank", rank},
                       {"goldsmith", form ? to_json(*form) : nlohmann::json()},
                       {"artin",
                        {{"conjugating_positive", conjugating},
                         {"fixes_boundary", boundary}}},
                       {"flux_conserved", flux}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "goldsmith form:\n";
    if (form) {
      for (int i = 1; i <= rank; ++i)
        std::cout << form_line(*form, i) << "\n";
    } else {
      std::cout << "NOT IN FORM\n";
    }
    std::cout << "artin (1) conjugating with positive signs: "
              << (conjugating ? "yes" : "no") << "\n";
    std::cout << "artin (2) fixes x1..xn: " << (boundary ? "yes" : "no")
              << "\n";
    std::cout << "total flux conserved: " << (flux ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_selftest(bool json) {
  SelftestResult result = run_selftest();
  if (json) {
    nlohmann::json checks = nlohmann::json::array();
    for (const SelftestCheck& c : result.checks) {
      nlohmann::json entry{{"label", c.label}, {"passed", c.passed}};
      if (!c.passed) entry["detail"] = c.detail;
      checks.push_back(entry);
    }
    std::cout << nlohmann::json{{"all_passed", result.all_passed()},
                                {"checks", checks}}
                     .dump(2)
              << "\n";
  } else {
    std::size_t failed = 0;
    for (const SelftestCheck& c : result.checks) {
      if (!c.passed) {
        ++failed;
        std::cout << "FAIL " << c.label << ": " << c.detail << "\n";
      }
    }
    for (const GoldenCase& gc : golden_cases()) {
      bool case_ok = true;
      for (const SelftestCheck& c : result.checks)
        if (!c.passed && c.label.rfind(gc.name, 0) == 0) case_ok = false;
      std::cout << (case_ok ? "PASS " : "FAIL ") << gc.name << "\n";
    }
    std::cout << "golden checks: " << (result.checks.size() - failed) << "/"
              << result.checks.size() << " passed\n";
  }
  return result.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact word-problem and image checks for extended loop braid "
               "words via the lifted Artin representation"};
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  int rank = 0;
  std::string word1, word2;

  CLI::App* eval = app.add_subcommand("eval", "print the image automorphism");
  eval->add_option("-n,--rank", rank, "number of circles")->required();
  eval->add_option("word", word1, "braid word, e.g. \"s1 s2^-1 t3 r1'\"")
      ->required();

  CLI::App* equal = app.add_subcommand("equal", "decide equality of two words");
  equal->add_option("-n,--rank", rank, "number of circles")->required();
  equal->add_option("lhs", word1, "first braid word")->required();
  equal->add_option("rhs", word2, "second braid word")->required();

  CLI::App* relations =
      app.add_subcommand("relations", "verify every presentation relation");
  relations->add_option("-n,--rank", rank, "number of circles")->required();

  CLI::App* check = app.add_subcommand(
      "check", "goldsmith / artin / flux report for a word's image");
  check->add_option("-n,--rank", rank, "number of circles")->required();
  check->add_option("word", word1, "braid word")->required();

  app.add_subcommand("selftest", "replay the golden generator identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) return run_eval(rank, word1, json);
    if (equal->parsed()) return run_equal(rank, word1, word2, json);
    if (relations->parsed()) {
      if (rank < 2) {
        std::cerr << "error: relations need rank >= 2\n";
        return 2;
      }
      return run_relations(rank, json);
    }
    if (check->parsed()) return run_check(rank, word1, json);
    return run_selftest(json);
  } catch (const BraidParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
