#pragma once

#include <json.hpp>

#include "loopbraid/agg.hpp"
#include "loopbraid/free_group.hpp"
#include "loopbraid/group_module.hpp"
#include "loopbraid/membership.hpp"
#include "loopbraid/relations.hpp"

namespace loopbraid {

/// Words serialize as arrays of [index, exponent] pairs; module elements
/// as arrays of [coefficient, word, basis] triples in canonical term
/// order. Coefficients render as JSON integers while they fit 64 bits
/// and as decimal strings beyond that.
inline nlohmann::json to_json(const Word& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Letter& l : w.letters()) arr.push_back({l.index, l.exponent});
  return arr;
}

inline nlohmann::json to_json(const Int& c) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (c >= lo && c <= hi) return static_cast<std::int64_t>(c);
  return c.str();
}

inline nlohmann::json to_json(const ModuleElt& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, c] : m.terms())
    arr.push_back({to_json(c), to_json(key.word), key.basis});
  return arr;
}

inline nlohmann::json to_json(const AggMorphism& f) {
  nlohmann::json x = nlohmann::json::array();
  nlohmann::json k = nlohmann::json::array();
  for (int i = 1; i <= f.rank(); ++i) {
    x.push_back(to_json(f.group_part().image(i)));
    k.push_back(to_json(f.module_image(i)));
  }
  return {{"rank", f.rank()}, {"x", x}, {"K", k}};
}

inline nlohmann::json to_json(const ConjugacyForm& form) {
  nlohmann::json conj = nlohmann::json::array();
  for (const Word& a : form.conjugators) conj.push_back(to_json(a));
  return {{"permutation", form.permutation},
          {"signs", form.signs},
          {"conjugators", conj}};
}

inline nlohmann::json to_json(const RelationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const RelationCheck& c : report.checks) {
    nlohmann::json entry = {{"id", c.instance.id},
                            {"indices", c.instance.indices},
                            {"lhs", to_string(c.instance.lhs)},
                            {"rhs", to_string(c.instance.rhs)},
                            {"passed", c.passed}};
    if (!c.passed) entry["difference"] = c.failure_detail;
    checks.push_back(entry);
  }
  return {{"rank", report.rank},
          {"all_passed", report.all_passed()},
          {"relations", checks}};
}

}  // namespace loopbraid
