#include <catch2/catch_amalgamated.hpp>

#include "loopbraid/free_group.hpp"
#include "support/naive_oracle.hpp"
#include "support/random_gen.hpp"

using namespace loopbraid;

namespace {

Word w(std::string_view text, int rank) { return parse_word(text, rank); }

}  // namespace

TEST_CASE("free reduction on letter sequences", "[free_group]") {
  // adjacent cancellation
  REQUIRE(Word(2, {{1, 1}, {2, 1}, {2, -1}}) == Word::generator(2, 1));
  // empty input is the identity
  REQUIRE(Word(3, {}).is_identity());
  // already reduced stays put
  REQUIRE(Word(1, {{1, 1}, {1, 1}}).letters() ==
          std::vector<Letter>{{1, 1}, {1, 1}});
  // nested cancellation collapses fully
  REQUIRE(Word(2, {{1, 1}, {2, 1}, {2, -1}, {1, -1}}).is_identity());

  REQUIRE_THROWS_AS(Word(2, {{3, 1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Word(2, {{0, 1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Word(2, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("reduction matches the rescan oracle and is idempotent",
          "[free_group][property]") {
  testgen::Rng rng(0xfeed501);
  for (int trial = 0; trial < 600; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    auto letters = testgen::random_letters(rng, rank, 1 + static_cast<int>(rng() % 16));
    Word reduced = Word::reduced(rank, letters);

    oracle::Seq raw;
    for (const Letter& l : letters) raw.emplace_back(l.index, l.exponent);
    REQUIRE(reduced == oracle::to_word(oracle::naive_reduce(raw), rank));
    REQUIRE(Word::reduced(rank, reduced.letters()) == reduced);
  }
}

TEST_CASE("multiplication", "[free_group]") {
  REQUIRE(w("x1 x2", 2) * w("x2^-1 x1", 2) == w("x1 x1", 2));
  REQUIRE(w("x1 x2^-1", 2) * Word(2) == w("x1 x2^-1", 2));
  REQUIRE(w("x2", 2) * w("x2^-1 x1 x2", 2) == w("x1 x2", 2));
  REQUIRE_THROWS_AS(Word(2) * Word(3), std::invalid_argument);
}

TEST_CASE("group axioms on random reduced words", "[free_group][property]") {
  testgen::Rng rng(0xfeed502);
  for (int trial = 0; trial < 600; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    Word a = testgen::random_word(rng, rank, 10);
    Word b = testgen::random_word(rng, rank, 10);
    Word c = testgen::random_word(rng, rank, 10);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * Word(rank) == a);
    REQUIRE(Word(rank) * a == a);
    REQUIRE(a * a.inverse() == Word(rank));
    REQUIRE(a.inverse() * a == Word(rank));
  }
}

TEST_CASE("inversion reverses and flips", "[free_group]") {
  REQUIRE(w("x2^-1 x1 x2", 2).inverse() == w("x2^-1 x1^-1 x2", 2));
  REQUIRE(Word(4).inverse() == Word(4));
  REQUIRE(w("x1", 1).inverse() == w("x1^-1", 1));
}

TEST_CASE("endomorphism application", "[free_group]") {
  // S^1_1 at rank 2 fixes the boundary word x1 x2
  FreeGroupEndo s1(2, {w("x2", 2), w("x2^-1 x1 x2", 2)});
  REQUIRE(s1(w("x1 x2", 2)) == w("x1 x2", 2));
  REQUIRE(s1(Word(2)).is_identity());

  // T^1_1 at rank 1 inverts the generator
  FreeGroupEndo t1(1, {w("x1^-1", 1)});
  REQUIRE(t1(w("x1 x1", 1)) == w("x1^-1 x1^-1", 1));

  REQUIRE_THROWS_AS(s1(Word(3)), std::invalid_argument);
  REQUIRE_THROWS_AS(FreeGroupEndo(2, {w("x1", 2)}), std::invalid_argument);
}

TEST_CASE("endomorphisms are homomorphisms and compose", "[free_group][property]") {
  testgen::Rng rng(0xfeed503);
  for (int trial = 0; trial < 500; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    FreeGroupEndo f = testgen::random_endo(rng, rank, 6);
    FreeGroupEndo g = testgen::random_endo(rng, rank, 6);
    Word u = testgen::random_word(rng, rank, 8);
    Word v = testgen::random_word(rng, rank, 8);
    REQUIRE(f(u * v) == f(u) * f(v));
    REQUIRE(f(g(u)) == compose(f, g)(u));

    // against the independent substitution oracle
    std::vector<oracle::Seq> images;
    for (const Word& img : f.images()) images.push_back(oracle::from_word(img));
    REQUIRE(f(u) ==
            oracle::to_word(oracle::naive_apply_endo(images, oracle::from_word(u)),
                            rank));
  }
}

TEST_CASE("cyclic core extraction", "[free_group]") {
  auto [a1, c1] = cyclic_core(w("x2^-1 x1 x2", 2));
  REQUIRE(a1 == w("x2^-1", 2));
  REQUIRE(c1 == w("x1", 2));

  auto [a2, c2] = cyclic_core(w("x1", 1));
  REQUIRE(a2.is_identity());
  REQUIRE(c2 == w("x1", 1));

  auto [a3, c3] = cyclic_core(w("x1 x2", 2));
  REQUIRE(a3.is_identity());
  REQUIRE(c3 == w("x1 x2", 2));

  auto [a4, c4] = cyclic_core(Word(2));
  REQUIRE(a4.is_identity());
  REQUIRE(c4.is_identity());
}

TEST_CASE("cyclic core round-trips and cores are cyclically reduced",
          "[free_group][property]") {
  testgen::Rng rng(0xfeed504);
  for (int trial = 0; trial < 600; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    Word word = testgen::random_word(rng, rank, 12);
    auto [a, c] = cyclic_core(word);
    REQUIRE(a * c * a.inverse() == word);
    if (c.size() >= 2)
      REQUIRE(c.letters().front() != inverse(c.letters().back()));
  }
}

TEST_CASE("shortlex order", "[free_group]") {
  REQUIRE(shortlex_less(Word(2), w("x1", 2)));           // length first
  REQUIRE(shortlex_less(w("x1", 2), w("x1^-1", 2)));     // x1 < x1^-1
  REQUIRE(shortlex_less(w("x1^-1", 2), w("x2", 2)));     // x1^-1 < x2
  REQUIRE(shortlex_less(w("x2 x2", 2), w("x1 x1 x1", 2)));
  REQUIRE_FALSE(shortlex_less(w("x1", 2), w("x1", 2)));
}

TEST_CASE("word text format", "[free_group][format]") {
  REQUIRE(to_string(Word(3)) == "1");
  REQUIRE(to_string(w("x2^-1 x1 x2", 2)) == "x2^-1 x1 x2");
  REQUIRE(parse_word("1", 2).is_identity());
  REQUIRE(parse_word("  x1   x2^-1 ", 2) == Word(2, {{1, 1}, {2, -1}}));
  REQUIRE(parse_word("x1^3", 1) == Word(1, {{1, 1}, {1, 1}, {1, 1}}));
  REQUIRE(parse_word("x1 x1^-1", 1).is_identity());

  REQUIRE_THROWS_AS(parse_word("y1", 2), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_word("x0", 2), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_word("x3", 2), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_word("x1^0", 2), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_word("x1^", 2), std::invalid_argument);

  testgen::Rng rng(0xfeed505);
  for (int trial = 0; trial < 200; ++trial) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    Word word = testgen::random_word(rng, rank, 10);
    REQUIRE(parse_word(to_string(word), rank) == word);
  }
}
