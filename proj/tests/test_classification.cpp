#include <catch2/catch_amalgamated.hpp>

#include "snakes/classification.hpp"
#include "snakes/enumeration.hpp"
#include "support/generators.hpp"

using namespace snakes;

namespace {
Word W(const char* text) { return Word::parse(text); }
ClusterPartition C(const char* text) { return ClusterPartition::parse(text); }
DecoratedSnake plain(const char* text) {
  const Word w = W(text);
  return {w, default_clusters(w)};
}
}  // namespace

TEST_CASE("default clusters", "[classification]") {
  CHECK(default_clusters(W("abab")).str() == "1;2;3");
  CHECK(default_clusters(W("aaaa")).str() == "1,2,3");
  CHECK(default_clusters(W("aa")).str() == "1");
  CHECK_THROWS_MATCHES(default_clusters(W("abc")), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::InvalidWord;
                       }));
}

TEST_CASE("cluster validation", "[classification]") {
  CHECK(validate_clusters(W("abab"), C("1,3;2")).ok());
  CHECK(validate_clusters(W("abab"), default_clusters(W("abab"))).ok());

  const auto adjacent = validate_clusters(W("abab"), C("1,2;3"));
  CHECK(adjacent.rule == ClusterRule::AdjacentSameNode);
  CHECK(adjacent.segments == std::vector<int>{1, 2});

  const auto mixed = validate_clusters(W("abacbc"), C("1,5;2,3;4"));
  CHECK(mixed.rule == ClusterRule::ClassMismatch);
  CHECK(mixed.segments == std::vector<int>{1, 5});

  CHECK(validate_clusters(W("abab"), C("1;2")).rule == ClusterRule::WrongSegmentSet);
  CHECK(validate_clusters(W("aaaa"), C("1;2;3")).rule == ClusterRule::SpiralSingleCluster);
  CHECK(validate_clusters(W("aaaa"), C("1,2,3")).ok());
  CHECK(validate_clusters(W("abc"), C("1;2")).rule == ClusterRule::WordInvalid);
}

TEST_CASE("default clusters always validate", "[classification]") {
  for (int m = 1; m <= 5; ++m)
    for (const Word& w : generate_ab(m)) CHECK(validate_clusters(w, default_clusters(w)).ok());
  CHECK(validate_clusters(W("aaaaa"), default_clusters(W("aaaaa"))).ok());
}

TEST_CASE("multiplicity is the cluster size", "[classification]") {
  const Word w = W("abab");
  for (int seg = 1; seg <= 3; ++seg) CHECK(multiplicity(w, default_clusters(w), seg) == 1);
  for (int seg = 1; seg <= 3; ++seg) CHECK(multiplicity(W("aaaa"), C("1,2,3"), seg) == 3);
  CHECK(multiplicity(w, C("1,3;2"), 1) == 2);
  CHECK(multiplicity(w, C("1,3;2"), 2) == 1);
  CHECK_THROWS_MATCHES(multiplicity(w, default_clusters(w), 4), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::BadIndex; }));
  CHECK_THROWS_AS(multiplicity(w, C("1,2;3"), 1), Error);  // invalid decoration

  // constant on blocks, by construction
  const ClusterPartition c = C("1,3;2");
  for (const auto& block : c.blocks()) {
    const int value = multiplicity(w, c, block.front());
    for (int seg : block) CHECK(multiplicity(w, c, seg) == value);
  }
}

TEST_CASE("weak equivalence fixtures", "[classification]") {
  const auto reversal = weakly_equivalent(plain("abacdbcd"), plain("abcabdcd"));
  CHECK(reversal.equivalent);
  REQUIRE(reversal.witness.has_value());
  CHECK(reversal.witness->reversed);
  CHECK_FALSE(reversal.witness->direct_match);

  CHECK_FALSE(weakly_equivalent(plain("abacbc"), plain("abcabc")).equivalent);
  CHECK_FALSE(weakly_equivalent({W("abab"), ClusterPartition::parse("1,3;2")}, plain("abab")).equivalent);
  CHECK(weakly_equivalent({W("abab"), ClusterPartition::parse("1,3;2")},
                          {W("abab"), ClusterPartition::parse("1,3;2")})
            .equivalent);
}

TEST_CASE("weak equivalence of spirals and across kinds", "[classification]") {
  CHECK(weakly_equivalent(plain("aaa"), plain("aaa")).equivalent);
  CHECK_FALSE(weakly_equivalent(plain("aaa"), plain("aaaa")).equivalent);
  CHECK_FALSE(weakly_equivalent(plain("aaa"), plain("abab")).equivalent);
  CHECK_THROWS_AS(weakly_equivalent({W("abab"), C("1,2;3")}, plain("abab")), Error);
}

TEST_CASE("weak equivalence is reflexive and symmetric", "[classification]") {
  for (int m = 1; m <= 4; ++m)
    for (const Word& a : generate_ab(m)) {
      CHECK(weakly_equivalent({a, default_clusters(a)}, {a, default_clusters(a)}).equivalent);
      for (const Word& b : generate_ab(m)) {
        const auto ab = weakly_equivalent({a, default_clusters(a)}, {b, default_clusters(b)});
        const auto ba = weakly_equivalent({b, default_clusters(b)}, {a, default_clusters(a)});
        CHECK(ab.equivalent == ba.equivalent);
      }
    }
}

TEST_CASE("orientation reversal is an involution", "[classification]") {
  for (int m = 2; m <= 5; ++m)
    for (const Word& w : generate_ab(m)) {
      const DecoratedSnake fwd{w, default_clusters(w)};
      const Word back = reverse(w);
      const DecoratedSnake rev{back, reverse_clusters(default_clusters(w), w.size())};
      const auto result = weakly_equivalent(fwd, rev);
      CAPTURE(w.str());
      CHECK(result.equivalent);
    }
}

TEST_CASE("equivalence witness carries the letter correspondence", "[classification]") {
  const auto result = weakly_equivalent(plain("abcdacbd"), {W("bcdabdca"), default_clusters(W("bcdabdca"))});
  CHECK(result.equivalent);
  REQUIRE(result.witness.has_value());
  CHECK_FALSE(result.witness->reversed);
  CHECK(result.witness->letter_map.at(0) == 1);  // a -> b
}
