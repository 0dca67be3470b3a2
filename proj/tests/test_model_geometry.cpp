#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "snakes/enumeration.hpp"
#include "snakes/model_geometry.hpp"
#include "support/generators.hpp"

using namespace snakes;

namespace {

Word W(const char* text) { return Word::parse(text); }

std::map<int, Rational> terms(std::initializer_list<std::pair<const int, Rational>> init) { return init; }

ArcLabel d(int j) { return {ArcKind::Delta, j}; }
ArcLabel s(int j) { return {ArcKind::Sigma, j}; }

/// The tangency law of the model: alpha for equal-letter delta pairs, beta
/// for every other distinct pair.
TangencyOrder expected_tord(const Word& w, const Exponents& e, ArcLabel a, ArcLabel b) {
  if (a == b) return TangencyOrder::infinity();
  if (a.kind == ArcKind::Delta && b.kind == ArcKind::Delta && w.at(a.index) == w.at(b.index))
    return e.alpha;
  return e.beta;
}

std::vector<ArcLabel> all_labels(const ModelSnake& model) {
  std::vector<ArcLabel> labels;
  for (int j = 1; j <= model.zones(); ++j) labels.push_back(d(j));
  for (int j = 1; j < model.zones(); ++j) labels.push_back(s(j));
  return labels;
}

}  // namespace

TEST_CASE("rational arithmetic", "[model_geometry]") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -2).str() == "-3/2");
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(1) < Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);

  CHECK(TangencyOrder::infinity() > TangencyOrder(Rational(100)));
  CHECK(TangencyOrder::infinity() == TangencyOrder::infinity());
  CHECK(min(TangencyOrder::infinity(), TangencyOrder(Rational(2))) == TangencyOrder(Rational(2)));
  CHECK(TangencyOrder(Rational(2)).str() == "2");
  CHECK(TangencyOrder::infinity().str() == "inf");
}

TEST_CASE("model arcs follow the construction rules", "[model_geometry]") {
  const ModelSnake model = build_model(W("abab"), {Rational(1), Rational(2)});
  CHECK(model.arc(d(1)).terms() == terms({{1, 1}}));
  CHECK(model.arc(d(2)).terms() == terms({{1, 1}, {2, 1}}));
  CHECK(model.arc(d(3)).terms() == terms({{1, 1}, {3, 2}}));
  CHECK(model.arc(d(4)).terms() == terms({{1, 1}, {2, 1}, {4, 2}}));
  CHECK(model.arc(s(1)).terms() == terms({{1, 1}, {5, 1}}));
  CHECK(model.arc(s(2)).terms() == terms({{1, 1}, {6, 1}}));
  CHECK(model.arc(s(3)).terms() == terms({{1, 1}, {7, 1}}));

  const ModelSnake frac = build_model(W("abacbc"), {Rational(1), Rational(3, 2)});
  CHECK(frac.arc(d(3)).terms() == terms({{1, 1}, {3, {3, 2}}}));
  CHECK(frac.arc(d(5)).terms() == terms({{1, 1}, {2, 1}, {5, {3, 2}}}));
  CHECK(frac.arc(d(6)).terms() == terms({{1, 1}, {4, 1}, {6, {3, 2}}}));

  const auto order = model.link_order();
  REQUIRE(order.size() == 7);
  CHECK(order.front() == d(1));
  CHECK(order[1] == s(1));
  CHECK(order.back() == d(4));
}

TEST_CASE("arc shapes: parameterizing term, term counts", "[model_geometry]") {
  for (int m = 2; m <= 5; ++m)
    for (const Word& w : generate_ab(m)) {
      const ModelSnake model = build_model(w);
      for (const ArcLabel& label : model.link_order()) {
        const auto& terms = model.arc(label).terms();
        CHECK(terms.at(1) == Rational(1));
        if (label.kind == ArcKind::Sigma)
          CHECK(terms.size() == 2);
        else
          CHECK(terms.size() <= 3);
      }
    }
}

TEST_CASE("model preconditions", "[model_geometry]") {
  CHECK_THROWS_MATCHES(build_model(W("aa")), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::ModelUndefined;
                       }));
  CHECK_THROWS_AS(build_model(W("abc")), Error);
  CHECK_THROWS_MATCHES(build_model(W("abab"), {Rational(2), Rational(1)}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::BadExponents; }));
  CHECK_THROWS_AS(build_model(W("abab"), {Rational(1, 2), Rational(2)}), Error);
}

TEST_CASE("tord matches the delta/sigma law", "[model_geometry]") {
  const Exponents e{Rational(1), Rational(2)};
  const ModelSnake model = build_model(W("abab"), e);
  CHECK(tord(model.arc(d(1)), model.arc(d(3))) == TangencyOrder(Rational(2)));
  CHECK(tord(model.arc(d(1)), model.arc(d(2))) == TangencyOrder(Rational(1)));
  CHECK(tord(model.arc(d(1)), model.arc(d(1))) == TangencyOrder::infinity());
  CHECK(tord(model.arc(s(1)), model.arc(d(3))) == TangencyOrder(Rational(1)));
  CHECK(tord(model.arc(s(1)), model.arc(s(2))) == TangencyOrder(Rational(1)));

  for (int m = 3; m <= 5; ++m)
    for (const Word& w : generate_ab(m)) {
      const ModelSnake snake = build_model(w, e);
      const auto labels = all_labels(snake);
      for (const auto& a : labels)
        for (const auto& b : labels)
          CHECK(tord(snake.arc(a), snake.arc(b)) == expected_tord(w, e, a, b));
    }
}

TEST_CASE("tord is ultrametric on named arcs", "[model_geometry]") {
  for (const char* text : {"abab", "abacbc", "abcdacbd", "ababa"}) {
    const ModelSnake model = build_model(W(text));
    const auto labels = all_labels(model);
    for (const auto& a : labels)
      for (const auto& b : labels)
        for (const auto& c : labels) {
          const auto ab = tord(model.arc(a), model.arc(b));
          const auto bc = tord(model.arc(b), model.arc(c));
          const auto ac = tord(model.arc(a), model.arc(c));
          CHECK(ac >= min(ab, bc));
        }
  }
}

TEST_CASE("inner tangency runs along the link chain", "[model_geometry]") {
  const Exponents e{Rational(1), Rational(2)};
  const ModelSnake model = build_model(W("abab"), e);
  CHECK(itord_named(model, d(1), d(4)) == TangencyOrder(e.beta));
  CHECK(itord_named(model, d(2), d(2)) == TangencyOrder::infinity());
  CHECK(itord_named(model, d(1), d(3)) == TangencyOrder(e.beta));
  CHECK(tord(model.arc(d(1)), model.arc(d(3))) == TangencyOrder(e.alpha));

  // weak normal embeddedness of the model: itord of distinct deltas is beta
  for (const Word& w : generate_ab(4)) {
    const ModelSnake snake = build_model(w, e);
    for (int i = 1; i <= snake.zones(); ++i)
      for (int j = i + 1; j <= snake.zones(); ++j)
        CHECK(itord_named(snake, d(i), d(j)) == TangencyOrder(e.beta));
  }
}

TEST_CASE("normal embeddedness of subtriangles is primitivity", "[model_geometry]") {
  const ModelSnake model = build_model(W("abcdacbd"));
  CHECK(is_ne_subtriangle(model, 1, 4).normally_embedded);
  const auto bad = is_ne_subtriangle(model, 1, 5);
  CHECK_FALSE(bad.normally_embedded);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == std::make_pair(1, 5));

  const ModelSnake small = build_model(W("abab"));
  CHECK_FALSE(is_ne_subtriangle(small, 1, 3).normally_embedded);
  CHECK_THROWS_AS(is_ne_subtriangle(small, 3, 3), Error);
  CHECK_THROWS_AS(is_ne_subtriangle(small, 0, 2), Error);
}

TEST_CASE("NE/witness duality over every snake name up to length 10", "[model_geometry]") {
  const Exponents e{Rational(1), Rational(2)};
  for (int m = 3; m <= 10; ++m) {
    testing::for_each_canonical_word(m, [&](const Word& w) {
      if (!validate(w).ok()) return;
      const ModelSnake model = build_model(w, e);
      for (int j = 1; j < m; ++j)
        for (int l = j + 1; l <= m; ++l) {
          const auto result = is_ne_subtriangle(model, j, l);
          CHECK(result.normally_embedded == is_primitive(subword(w, j, l)));
          if (!result.normally_embedded) {
            REQUIRE(result.witness.has_value());
            const auto [i, i2] = *result.witness;
            CHECK(j <= i);
            CHECK(i < i2);
            CHECK(i2 <= l);
            CHECK(w.at(i) == w.at(i2));
            CHECK(tord(model.arc(d(i)), model.arc(d(i2))) == TangencyOrder(e.alpha));
            CHECK(itord_named(model, d(i), d(i2)) == TangencyOrder(e.beta));
          }
        }
    });
  }
}

TEST_CASE("bubble subtriangles are semi-primitive subwords", "[model_geometry]") {
  const ModelSnake model = build_model(W("abcdacbd"));
  CHECK(is_bubble_subtriangle(model, 1, 5));
  CHECK(is_bubble_subtriangle(model, 3, 6));
  CHECK_FALSE(is_bubble_subtriangle(model, 1, 4));
  const ModelSnake small = build_model(W("abab"));
  CHECK_FALSE(is_bubble_subtriangle(small, 1, 4));
}

TEST_CASE("structure of a snake name", "[model_geometry]") {
  const auto bubble = structure(W("aa"));
  CHECK(bubble.nodal_zone_count == 2);
  CHECK(bubble.nodes.block_count() == 1);
  CHECK(bubble.segments.size() == 1);
  CHECK(bubble.boundary_nodal_zones == std::make_pair(1, 2));

  const auto four = structure(W("abab"));
  CHECK(four.nodal_zone_count == 4);
  CHECK(four.nodes.str() == "1,3;2,4");
  CHECK(four.segments.size() == 3);
  CHECK(four.spectra == std::vector<std::vector<Rational>>{{Rational(2)}, {Rational(2)}});

  const auto eight = structure(W("abcdacbd"), {Rational(1), Rational(3, 2)});
  CHECK(eight.nodal_zone_count == 8);
  CHECK(eight.nodes.block_count() == 4);
  CHECK(eight.segments.size() == 7);
  for (const auto& spectrum : eight.spectra) CHECK(spectrum == std::vector<Rational>{Rational(3, 2)});

  CHECK_THROWS_AS(structure(W("aaa")), Error);  // spiral words have no snake-name structure
  // every node groups at least two nodal zones, one per occurrence
  for (const Word& w : generate_ab(4)) {
    const SnakeStructure st = structure(w);
    for (const auto& block : st.nodes.blocks()) CHECK(block.size() >= 2);
  }
}

TEST_CASE("segment letter-pair classes", "[model_geometry]") {
  const auto classes = segment_pair_classes(W("abab"));
  REQUIRE(classes.size() == 1);
  CHECK(classes.at({0, 1}) == std::vector<int>{1, 2, 3});

  const auto six = segment_pair_classes(W("abacbc"));
  CHECK(six.at({0, 1}) == std::vector<int>{1, 2});
  CHECK(six.at({0, 2}) == std::vector<int>{3});
  CHECK(six.at({1, 2}) == std::vector<int>{4, 5});

  const auto spiral = segment_pair_classes(W("aaa"));
  CHECK(spiral.at({0, 0}) == std::vector<int>{1, 2});

  CHECK_THROWS_AS(segment_pair_classes(W("abc")), Error);
}

TEST_CASE("tord commutes with exponent relabeling", "[model_geometry]") {
  const Exponents e1{Rational(1), Rational(2)};
  const Exponents e2{Rational(3, 2), Rational(7, 3)};
  for (const Word& w : generate_ab(4)) {
    const ModelSnake m1 = build_model(w, e1);
    const ModelSnake m2 = build_model(w, e2);
    const auto labels = all_labels(m1);
    for (const auto& a : labels)
      for (const auto& b : labels) {
        const auto t1 = tord(m1.arc(a), m1.arc(b));
        const auto t2 = tord(m2.arc(a), m2.arc(b));
        if (t1.is_infinite()) {
          CHECK(t2.is_infinite());
        } else if (t1 == TangencyOrder(e1.beta)) {
          CHECK(t2 == TangencyOrder(e2.beta));
        } else {
          CHECK(t1 == TangencyOrder(e1.alpha));
          CHECK(t2 == TangencyOrder(e2.alpha));
        }
      }
  }
}
