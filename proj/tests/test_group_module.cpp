#include <catch2/catch_amalgamated.hpp>

#include "loopbraid/group_module.hpp"
#include "support/random_gen.hpp"

using namespace loopbraid;

namespace {

Word w(std::string_view text, int rank) { return parse_word(text, rank); }
ModuleElt m(std::string_view text, int rank) {
  return parse_module_elt(text, rank);
}

void require_pruned(const ModuleElt& elt) {
  for (const auto& [key, c] : elt.terms()) REQUIRE(c != 0);
}

}  // namespace

TEST_CASE("module addition", "[module]") {
  REQUIRE(m("K1", 2) + m("K2 - K1", 2) == m("K2", 2));
  ModuleElt x = m("K1 + 2 (x1 > K2)", 2);
  REQUIRE(x + ModuleElt(2) == x);
  // the two images of the rank-2 braiding sum to the total flux
  REQUIRE(m("K1 + K2 - (x2^-1 > K1)", 2) + m("(x2^-1 > K1)", 2) ==
          m("K1 + K2", 2));
  REQUIRE_THROWS_AS(ModuleElt(2) + ModuleElt(3), std::invalid_argument);
}

TEST_CASE("diagonal action", "[module]") {
  ModuleElt elt = m("K1 + 3 (x1 > K2)", 2);
  REQUIRE(act(Word(2), elt) == elt);
  REQUIRE(act(w("x2^-1", 2), m("K1", 2)) == m("(x2^-1 > K1)", 2));
  REQUIRE(act(w("x2", 2), act(w("x2^-1", 2), m("K1", 2))) == m("K1", 2));
  REQUIRE_THROWS_AS(act(Word(3), elt), std::invalid_argument);
}

TEST_CASE("module axioms over random inputs", "[module][property]") {
  testgen::Rng rng(0xfeed601);
  for (int trial = 0; trial < 600; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    Word g = testgen::random_word(rng, rank, 6);
    Word h = testgen::random_word(rng, rank, 6);
    ModuleElt a = testgen::random_module_elt(rng, rank, 5, 5);
    ModuleElt b = testgen::random_module_elt(rng, rank, 5, 5);

    REQUIRE(a + b == b + a);
    REQUIRE(a + (-a) == ModuleElt(rank));
    REQUIRE(act(g, a + b) == act(g, a) + act(g, b));
    REQUIRE(act(g, act(h, a)) == act(g * h, a));
    REQUIRE(act(g, Int(3) * a) == Int(3) * act(g, a));

    require_pruned(a + b);
    require_pruned(a - b);
    require_pruned(act(g, a));
    require_pruned(Int(0) * a);
    REQUIRE((Int(0) * a).is_zero());
  }
}

TEST_CASE("total flux", "[module]") {
  REQUIRE(total_flux(1) == m("K1", 1));
  REQUIRE(total_flux(3) == m("K1 + K2 + K3", 3));
  REQUIRE_THROWS_AS(total_flux(0), std::invalid_argument);
}

TEST_CASE("group ring arithmetic", "[module]") {
  GroupRingElt a = GroupRingElt::of(w("x1", 2)) + GroupRingElt::of(w("x2", 2));
  GroupRingElt b = GroupRingElt::of(w("x1^-1", 2));
  GroupRingElt prod = a * b;
  GroupRingElt expected = GroupRingElt::unit(2) + GroupRingElt::of(w("x2 x1^-1", 2));
  REQUIRE(prod == expected);
  REQUIRE(a - a == GroupRingElt(2));
  REQUIRE(GroupRingElt::unit(2) * a == a);
}

TEST_CASE("ring action factors the diagonal action", "[module][property]") {
  testgen::Rng rng(0xfeed602);
  for (int trial = 0; trial < 500; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 3);
    GroupRingElt r = testgen::random_ring_elt(rng, rank, 4, 4);
    GroupRingElt s = testgen::random_ring_elt(rng, rank, 4, 4);
    ModuleElt a = testgen::random_module_elt(rng, rank, 4, 4);
    Word g = testgen::random_word(rng, rank, 5);

    REQUIRE(act(r * s, a) == act(r, act(s, a)));
    REQUIRE(act(r + s, a) == act(r, a) + act(s, a));
    REQUIRE(act(GroupRingElt::of(g), a) == act(g, a));
  }
}

TEST_CASE("module element text format", "[module][format]") {
  REQUIRE(to_string(ModuleElt(2)) == "0");
  REQUIRE(to_string(m("K1 + K2 - (x2^-1 > K1)", 2)) ==
          "K1 + K2 - (x2^-1 > K1)");
  // canonical term order: shortlex on the word, then basis index
  ModuleElt elt(2);
  elt.add_term(w("x1", 2), 2, -3);
  elt.add_term(Word(2), 1, 2);
  elt.add_term(w("x1", 2), 1, 1);
  REQUIRE(to_string(elt) == "2 K1 + (x1 > K1) - 3 (x1 > K2)");

  ModuleElt neg(2);
  neg.add_term(Word(2), 1, -1);
  neg.add_term(Word(2), 2, 1);
  REQUIRE(to_string(neg) == "-K1 + K2");

  ModuleElt negword(2);
  negword.add_term(w("x1", 2), 2, -1);
  REQUIRE(to_string(negword) == "-(x1 > K2)");

  REQUIRE(parse_module_elt("0", 3).is_zero());
  REQUIRE_THROWS_AS(parse_module_elt("K4", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_module_elt("K1 +", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_module_elt("(x1 > K1", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_module_elt("2", 3), std::invalid_argument);

  testgen::Rng rng(0xfeed603);
  for (int trial = 0; trial < 300; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    ModuleElt x = testgen::random_module_elt(rng, rank, 6, 5);
    REQUIRE(parse_module_elt(to_string(x), rank) == x);
  }
}

TEST_CASE("coefficients do not overflow", "[module]") {
  // 2^200 by repeated doubling; exact arithmetic must keep every bit
  ModuleElt x = ModuleElt::basis(1, 1);
  for (int k = 0; k < 200; ++k) x = x + x;
  Int expected = Int(1) << 200;
  REQUIRE(x.terms().size() == 1);
  REQUIRE(x.terms().begin()->second == expected);
  REQUIRE(to_string(x) == expected.str() + " K1");
}
