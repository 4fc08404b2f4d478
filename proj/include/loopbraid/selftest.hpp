#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "loopbraid/agg.hpp"
#include "loopbraid/braid_word.hpp"
#include "loopbraid/group_module.hpp"
#include "loopbraid/lifted_artin.hpp"
#include "loopbraid/relations.hpp"

namespace loopbraid {

/// One side of a golden identity: a braid word (tokens in composition
/// order, leftmost acts last) together with the expected images of
/// K1, K2, K3 after each application step, rightmost factor first.
struct GoldenSide {
  std::string word;
  std::vector<std::array<std::string, 3>> images_after_step;
};

struct GoldenCase {
  std::string name;
  GoldenSide lhs;
  GoldenSide rhs;
};

/// The six rank-3 generator identities verified generator-by-generator,
/// with every intermediate module image pinned. Conventions: x=x1, y=x2,
/// z=x3 and K=K1, L=K2, M=K3.
inline std::vector<GoldenCase> golden_cases() {
  return {
      {"S1 S2 S1 = S2 S1 S2",
       {"s1 s2 s1",
        {{"K1 + K2 - (x2^-1 > K1)", "(x2^-1 > K1)", "K3"},
         {"K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)", "(x3^-1 > K1)",
          "(x3^-1 > K2)"},
         {"K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)",
          "(x3^-1 > K1) + (x3^-1 > K2) - (x3^-1 x2^-1 > K1)",
          "(x3^-1 x2^-1 > K1)"}}},
       {"s2 s1 s2",
        {{"K1", "K2 + K3 - (x3^-1 > K2)", "(x3^-1 > K2)"},
         {"K1 + K2 - (x2^-1 > K1)",
          "K3 + (x2^-1 > K1) - (x3^-1 x2^-1 > K1)", "(x3^-1 x2^-1 > K1)"},
         {"K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)",
          "(x3^-1 > K1) + (x3^-1 > K2) - (x3^-1 x2^-1 > K1)",
          "(x3^-1 x2^-1 > K1)"}}}},
      {"R2 R1 S2 = S1 R2 R1",
       {"r2 r1 s2",
        {{"K1", "K2 + K3 - (x3^-1 > K2)", "(x3^-1 > K2)"},
         {"K2", "K1 + K3 - (x3^-1 > K1)", "(x3^-1 > K1)"},
         {"K3", "K1 + K2 - (x2^-1 > K1)", "(x2^-1 > K1)"}}},
       {"s1 r2 r1",
        {{"K2", "K1", "K3"},
         {"K3", "K1", "K2"},
         {"K3", "K1 + K2 - (x2^-1 > K1)", "(x2^-1 > K1)"}}}},
      {"S2 S1 R2 = R1 S2 S1",
       {"s2 s1 r2",
        {{"K1", "K3", "K2"},
         {"K1 + K2 - (x2^-1 > K1)", "K3", "(x2^-1 > K1)"},
         {"K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)", "(x3^-1 > K2)",
          "(x3^-1 > K1)"}}},
       {"r1 s2 s1",
        {{"K1 + K2 - (x2^-1 > K1)", "(x2^-1 > K1)", "K3"},
         {"K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)", "(x3^-1 > K1)",
          "(x3^-1 > K2)"},
         {"K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)", "(x3^-1 > K2)",
          "(x3^-1 > K1)"}}}},
      {"T1 R1 = R1 T2",
       {"t1 r1", {{"K2", "K1", "K3"}, {"K2", "K1", "K3"}}},
       {"r1 t2", {{"K1", "K2", "K3"}, {"K2", "K1", "K3"}}}},
      {"T1 S1 = S1 T2",
       {"t1 s1",
        {{"K1 + K2 - (x2^-1 > K1)", "(x2^-1 > K1)", "K3"},
         {"K1 + K2 - (x2^-1 > K1)", "(x2^-1 > K1)", "K3"}}},
       {"s1 t2",
        {{"K1", "K2", "K3"},
         {"K1 + K2 - (x2^-1 > K1)", "(x2^-1 > K1)", "K3"}}}},
      {"T2 S1 = R1 S1^-1 R1 T1",
       {"t2 s1",
        {{"K1 + K2 - (x2^-1 > K1)", "(x2^-1 > K1)", "K3"},
         {"K1 + K2 - (x2 > K1)", "(x2 > K1)", "K3"}}},
       {"r1 s1^-1 r1 t1",
        {{"K1", "K2", "K3"},
         {"K2", "K1", "K3"},
         {"K1 + K2 - (x1 > K2)", "(x1 > K2)", "K3"},
         {"K1 + K2 - (x2 > K1)", "(x2 > K1)", "K3"}}}}};
}

struct SelftestCheck {
  std::string label;
  bool passed;
  std::string detail;
};

struct SelftestResult {
  std::vector<SelftestCheck> checks;

  bool all_passed() const {
    for (const SelftestCheck& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline void run_golden_side(const std::string& case_name, const char* side,
                            const GoldenSide& data, SelftestResult& out) {
  constexpr int n = 3;
  const BraidWord word = parse_braid_word(data.word, n);
  AggMorphism composite = AggMorphism::identity(n);
  const auto& toks = word.tokens();
  std::size_t step = 0;
  for (auto it = toks.rbegin(); it != toks.rend(); ++it, ++step) {
    AggAutomorphism g = generator_automorphism(it->kind, it->index, n);
    if (it->exponent < 0) g = g.inverted();
    composite = compose(g.forward(), composite);
    for (int i = 1; i <= n; ++i) {
      const std::string& expected_text =
          data.images_after_step.at(step)[static_cast<std::size_t>(i - 1)];
      const ModuleElt expected = parse_module_elt(expected_text, n);
      const ModuleElt got = composite.module_image(i);
      std::string label = case_name + " [" + side + "] step " +
                          std::to_string(step + 1) + " K" + std::to_string(i);
      if (got == expected) {
        out.checks.push_back({std::move(label), true, ""});
      } else {
        out.checks.push_back({std::move(label), false,
                              "expected " + expected_text + ", got " +
                                  loopbraid::to_string(got)});
      }
    }
  }
  // The stepwise composite must agree with the word evaluator.
  const AggMorphism via_evaluate = evaluate(word).forward();
  out.checks.push_back({case_name + " [" + side + "] matches evaluate()",
                        composite == via_evaluate,
                        composite == via_evaluate ? "" : "fold mismatch"});
}

}  // namespace detail

/// Replays the six golden identities, checking every intermediate module
/// image and the final equality of both sides as full morphisms.
inline SelftestResult run_selftest() {
  SelftestResult out;
  for (const GoldenCase& c : golden_cases()) {
    detail::run_golden_side(c.name, "lhs", c.lhs, out);
    detail::run_golden_side(c.name, "rhs", c.rhs, out);
    const AggMorphism lhs = evaluate(parse_braid_word(c.lhs.word, 3)).forward();
    const AggMorphism rhs = evaluate(parse_braid_word(c.rhs.word, 3)).forward();
    out.checks.push_back({c.name + " sides equal", lhs == rhs,
                          lhs == rhs ? ""
                                     : detail::first_difference(lhs, rhs)});
  }
  return out;
}

}  // namespace loopbraid
