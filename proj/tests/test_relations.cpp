#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <map>

#include "loopbraid/relations.hpp"
#include "loopbraid/selftest.hpp"

using namespace loopbraid;

namespace {

ModuleElt m(std::string_view text, int rank) {
  return parse_module_elt(text, rank);
}

std::map<std::string, int> count_by_id(const std::vector<RelationInstance>& v) {
  std::map<std::string, int> out;
  for (const auto& rel : v) ++out[rel.id];
  return out;
}

}  // namespace

TEST_CASE("schema instantiation respects index bounds", "[relations]") {
  auto n2 = count_by_id(presentation_relations(2));
  // only schemas with admissible indices appear; no |i-j| > 1 instances
  REQUIRE(n2 == std::map<std::string, int>{{"LBG5", 1},
                                           {"eLBG1", 1},
                                           {"eLBG2", 2},
                                           {"eLBG5", 1},
                                           {"eLBG6", 1},
                                           {"eLBG7", 1}});

  auto n3 = count_by_id(presentation_relations(3));
  REQUIRE(n3 == std::map<std::string, int>{{"bg2", 1},
                                           {"LBG2", 1},
                                           {"LBG4", 1},
                                           {"LBG5", 2},
                                           {"LBG7", 1},
                                           {"LBG8", 1},
                                           {"eLBG1", 3},
                                           {"eLBG2", 3},
                                           {"eLBG3", 1},
                                           {"eLBG4", 1},
                                           {"eLBG5", 2},
                                           {"eLBG6", 2},
                                           {"eLBG7", 2}});

  auto n4 = count_by_id(presentation_relations(4));
  REQUIRE(n4.at("bg1") == 1);   // (i, j) = (1, 3)
  REQUIRE(n4.at("LBG6") == 2);  // ordered pairs (1,3) and (3,1)
  REQUIRE(n4.at("eLBG3") == 4); // (1,3) (1,4) (2,4) (3,1)

  REQUIRE_THROWS_AS(presentation_relations(1), std::invalid_argument);
}

TEST_CASE("every presentation relation holds for ranks 2..5", "[relations]") {
  for (int n = 2; n <= 5; ++n) {
    RelationReport report = verify_relations(n);
    CAPTURE(n);
    for (const RelationCheck& check : report.checks) {
      CAPTURE(instance_label(check.instance), check.failure_detail);
      REQUIRE(check.passed);
    }
    REQUIRE(report.all_passed());
    REQUIRE(report.failed_count() == 0);
  }
}

TEST_CASE("representative relation images at rank 3", "[relations]") {
  // eLBG7 at i=1: both sides send K1 to K1 + K2 - x2 . K1
  AggMorphism lhs = evaluate(parse_braid_word("t2 s1", 3)).forward();
  AggMorphism rhs = evaluate(parse_braid_word("r1 s1^-1 r1 t1", 3)).forward();
  REQUIRE(lhs.module_image(1) == m("K1 + K2 - (x2 > K1)", 3));
  REQUIRE(rhs.module_image(1) == m("K1 + K2 - (x2 > K1)", 3));

  // LBG8: both sides send K3 to x3^-1 . K1
  AggMorphism l8 = evaluate(parse_braid_word("s2 s1 r2", 3)).forward();
  AggMorphism r8 = evaluate(parse_braid_word("r1 s2 s1", 3)).forward();
  REQUIRE(l8.module_image(3) == m("(x3^-1 > K1)", 3));
  REQUIRE(r8.module_image(3) == m("(x3^-1 > K1)", 3));
}

TEST_CASE("reports are deterministic and carry failure details",
          "[relations]") {
  RelationReport a = verify_relations(3);
  RelationReport b = verify_relations(3);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t k = 0; k < a.checks.size(); ++k) {
    REQUIRE(instance_label(a.checks[k].instance) ==
            instance_label(b.checks[k].instance));
    REQUIRE(a.checks[k].passed == b.checks[k].passed);
  }

  // failure formatting, exercised directly on two unequal morphisms
  AggMorphism s = evaluate(parse_braid_word("s1", 2)).forward();
  AggMorphism r = evaluate(parse_braid_word("r1", 2)).forward();
  std::string diff = detail::first_difference(s, r);
  REQUIRE(diff.find("x2") != std::string::npos);
  REQUIRE(detail::first_difference(s, s).empty());
}

TEST_CASE("appendix golden vectors replay exactly", "[relations][golden]") {
  SelftestResult result = run_selftest();
  REQUIRE(result.checks.size() > 100);
  for (const SelftestCheck& check : result.checks) {
    CAPTURE(check.label, check.detail);
    REQUIRE(check.passed);
  }
  REQUIRE(result.all_passed());
}
