#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loopbraid/braid_word.hpp"
#include "loopbraid/lifted_artin.hpp"

namespace loopbraid {

/// One instantiated presentation relation lhs = rhs.
struct RelationInstance {
  std::string id;            // schema name: bg1, bg2, LBG1..LBG8, eLBG1..eLBG7
  std::vector<int> indices;  // the instantiated schema indices
  BraidWord lhs;
  BraidWord rhs;
};

namespace detail {

inline BraidToken sig(int i, int e = 1) { return {BraidKind::sigma, i, e}; }
inline BraidToken rho(int i, int e = 1) { return {BraidKind::rho, i, e}; }
inline BraidToken tau(int j, int e = 1) { return {BraidKind::tau, j, e}; }

}  // namespace detail

/// Every defining relation of the extended loop braid group presentation,
/// instantiated at every admissible index tuple for the given rank.
/// bg1/bg2 are the braid group relations; they coincide with LBG1/LBG2
/// and are listed under both names.
inline std::vector<RelationInstance> presentation_relations(int n) {
  detail::require(n >= 2, "relation schemas need rank >= 2");
  using detail::rho;
  using detail::sig;
  using detail::tau;
  std::vector<RelationInstance> out;
  auto add = [&](std::string id, std::vector<int> indices,
                 std::vector<BraidToken> lhs, std::vector<BraidToken> rhs) {
    out.push_back(RelationInstance{std::move(id), std::move(indices),
                                   BraidWord(n, std::move(lhs)),
                                   BraidWord(n, std::move(rhs))});
  };

  // sigma_i sigma_j = sigma_j sigma_i, |i-j| > 1
  auto sigma_commute = [&](const std::string& id) {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        add(id, {i, j}, {sig(i), sig(j)}, {sig(j), sig(i)});
  };
  // sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}
  auto sigma_braid = [&](const std::string& id) {
    for (int i = 1; i <= n - 2; ++i)
      add(id, {i}, {sig(i), sig(i + 1), sig(i)},
          {sig(i + 1), sig(i), sig(i + 1)});
  };

  sigma_commute("bg1");
  sigma_braid("bg2");
  sigma_commute("LBG1");
  sigma_braid("LBG2");
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      add("LBG3", {i, j}, {rho(i), rho(j)}, {rho(j), rho(i)});
  for (int i = 1; i <= n - 2; ++i)
    add("LBG4", {i}, {rho(i), rho(i + 1), rho(i)},
        {rho(i + 1), rho(i), rho(i + 1)});
  for (int i = 1; i <= n - 1; ++i) add("LBG5", {i}, {rho(i), rho(i)}, {});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (i - j > 1 || j - i > 1)
        add("LBG6", {i, j}, {rho(i), sig(j)}, {sig(j), rho(i)});
  for (int i = 1; i <= n - 2; ++i)
    add("LBG7", {i}, {rho(i + 1), rho(i), sig(i + 1)},
        {sig(i), rho(i + 1), rho(i)});
  for (int i = 1; i <= n - 2; ++i)
    add("LBG8", {i}, {sig(i + 1), sig(i), rho(i + 1)},
        {rho(i), sig(i + 1), sig(i)});

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add("eLBG1", {i, j}, {tau(i), tau(j)}, {tau(j), tau(i)});
  for (int i = 1; i <= n; ++i) add("eLBG2", {i}, {tau(i), tau(i)}, {});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j)
      if (i - j > 1 || j - i > 1)
        add("eLBG3", {i, j}, {sig(i), tau(j)}, {tau(j), sig(i)});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j)
      if (i - j > 1 || j - i > 1)
        add("eLBG4", {i, j}, {rho(i), tau(j)}, {tau(j), rho(i)});
  for (int i = 1; i <= n - 1; ++i)
    add("eLBG5", {i}, {tau(i), rho(i)}, {rho(i), tau(i + 1)});
  for (int i = 1; i <= n - 1; ++i)
    add("eLBG6", {i}, {tau(i), sig(i)}, {sig(i), tau(i + 1)});
  for (int i = 1; i <= n - 1; ++i)
    add("eLBG7", {i}, {tau(i + 1), sig(i)},
        {rho(i), sig(i, -1), rho(i), tau(i)});

  return out;
}

struct RelationCheck {
  RelationInstance instance;
  bool passed;
  std::string failure_detail;  // first differing generator image, if failed
};

struct RelationReport {
  int rank;
  std::vector<RelationCheck> checks;

  bool all_passed() const {
    for (const RelationCheck& c : checks)
      if (!c.passed) return false;
    return true;
  }

  std::size_t failed_count() const {
    std::size_t k = 0;
    for (const RelationCheck& c : checks) k += c.passed ? 0 : 1;
    return k;
  }
};

namespace detail {

inline std::string first_difference(const AggMorphism& a, const AggMorphism& b) {
  for (int i = 1; i <= a.rank(); ++i) {
    if (a.group_part().image(i) != b.group_part().image(i))
      return "x" + std::to_string(i) + ": lhs -> " +
             loopbraid::to_string(a.group_part().image(i)) + ", rhs -> " +
             loopbraid::to_string(b.group_part().image(i));
    if (a.module_image(i) != b.module_image(i))
      return "K" + std::to_string(i) + ": lhs -> " +
             loopbraid::to_string(a.module_image(i)) + ", rhs -> " +
             loopbraid::to_string(b.module_image(i));
  }
  return "";
}

}  // namespace detail

/// Checks both sides of every relation instance under evaluate().
/// Failures are reported as data, not errors.
inline RelationReport verify_relations(int n) {
  RelationReport report{n, {}};
  for (RelationInstance& rel : presentation_relations(n)) {
    AggMorphism lhs = evaluate(rel.lhs).forward();
    AggMorphism rhs = evaluate(rel.rhs).forward();
    const bool ok = lhs == rhs;
    std::string detail = ok ? "" : detail::first_difference(lhs, rhs);
    report.checks.push_back(
        RelationCheck{std::move(rel), ok, std::move(detail)});
  }
  return report;
}

inline std::string instance_label(const RelationInstance& rel) {
  std::string s = rel.id + " (";
  const char* names[] = {"i", "j"};
  for (std::size_t k = 0; k < rel.indices.size(); ++k) {
    if (k > 0) s += ", ";
    s += std::string(names[k < 2 ? k : 1]) + "=" + std::to_string(rel.indices[k]);
  }
  s += ")";
  return s;
}

}  // namespace loopbraid
