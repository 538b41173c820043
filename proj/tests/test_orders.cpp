#include <doctest.h>

#include <algorithm>

#include "pingpong/orders.hpp"

using namespace pingpong;

namespace {

const Configuration kSchottky = make_configuration(2, "abAB", {0, 0});
const Configuration kExotic = make_configuration(2, "BABabAba", {0, 1});

Word w(std::string_view s) { return Word::parse(2, s); }

std::vector<CentralElement> central_ball(int radius, long height) {
  std::vector<CentralElement> out;
  for (const Word& g : ball(2, radius)) {
    for (long m = -height; m <= height; ++m) out.push_back({g, m});
  }
  return out;
}

}  // namespace

TEST_CASE("circular order at the basepoint") {
  const Realization r = standard_realization(kSchottky);
  const Word id(2);
  // a moves 0 into D(a) = [1/12, 2/12], b into D(b) = [4/12, 5/12]
  CHECK(circular_order(r, id, w("a"), w("b")) == CircularValue::counterclockwise);
  CHECK(circular_order(r, id, w("b"), w("a")) == CircularValue::clockwise);
  CHECK(circular_order(r, w("a"), w("a"), w("b")) == CircularValue::degenerate);
  CHECK(circular_order(r, w("A"), w("B"), id) == CircularValue::counterclockwise);
}

TEST_CASE("the order does not depend on the layout") {
  for (const Configuration& cfg : {kSchottky, kExotic}) {
    const Realization s = standard_realization(cfg, Layout::standard);
    const Realization p = standard_realization(cfg, Layout::perturbed);
    CHECK_FALSE(order_agreement(s, p, 2).has_value());
  }
}

TEST_CASE("different configurations give different orders") {
  const Realization s = standard_realization(kSchottky);
  const Realization other = standard_realization(make_configuration(2, "aBAb", {0, 0}));
  CHECK(order_agreement(s, other, 1).has_value());
}

TEST_CASE("circular order axioms") {
  for (const Configuration& cfg : {kSchottky, kExotic}) {
    const Realization r = standard_realization(cfg);
    const auto bad = cocycle_check(r, 1, 10, 3);
    CHECK_FALSE(bad.has_value());
  }
}

TEST_CASE("central elements") {
  const CentralElement u = CentralElement::parse(2, "ab:-2");
  CHECK(u.g == w("ab"));
  CHECK(u.m == -2);
  CHECK(CentralElement::parse(2, "1:3").g.is_identity());
  CHECK(CentralElement::parse(2, "Ba").m == 0);
  CHECK(u.to_string() == "ab:-2");
  CHECK((u * CentralElement::parse(2, "B:5")).to_string() == "a:3");
  CHECK((u * CentralElement::parse(2, "Bb:5")).to_string() == "ab:3");
  CHECK_THROWS_AS(CentralElement::parse(2, "a:x"), std::invalid_argument);
  CHECK_THROWS_AS(CentralElement::parse(2, "a:"), std::invalid_argument);
}

TEST_CASE("lifts project to the circle action and form a homomorphism") {
  for (const Configuration& cfg : {kSchottky, kExotic}) {
    const Realization r = standard_realization(cfg);
    const auto words = ball(2, 3);
    for (const Word& g : words) {
      const Rational v = lifted_value(r, {g, 0});
      CHECK(mod1(v) == apply(r, g, r.basepoint()).value());
      CHECK(word_lift(r, g)(0) == v);
    }
    for (std::size_t i = 0; i < words.size(); i += 7) {
      for (std::size_t j = 0; j < words.size(); j += 5) {
        const Word gh = words[i] * words[j];
        const LiftedMap composed = compose(word_lift(r, words[i]), word_lift(r, words[j]));
        CHECK(composed(0) == word_lift(r, gh)(0));
      }
    }
  }
}

TEST_CASE("lifted linear order") {
  const Realization r = standard_realization(kExotic);
  const auto elems = central_ball(2, 2);
  // strict total order
  for (const auto& u : elems) {
    for (const auto& v : elems) {
      const int c = linear_compare(r, u, v);
      CHECK((c == 0) == (u.g == v.g && u.m == v.m));
      CHECK(c == -linear_compare(r, v, u));
    }
  }
  std::vector<CentralElement> sorted = elems;
  std::sort(sorted.begin(), sorted.end(),
            [&](const CentralElement& x, const CentralElement& y) { return linear_compare(r, x, y) < 0; });
  for (std::size_t i = 0; i + 2 < sorted.size(); ++i) {
    CHECK(linear_compare(r, sorted[i], sorted[i + 2]) < 0);
  }
  // left invariance
  for (const auto& h : central_ball(1, 1)) {
    for (std::size_t i = 0; i < elems.size(); i += 3) {
      for (std::size_t j = 1; j < elems.size(); j += 4) {
        CHECK(linear_compare(r, h * elems[i], h * elems[j]) == linear_compare(r, elems[i], elems[j]));
      }
    }
  }
  // z = (id, 1) is the translation by one
  const CentralElement z{Word(2), 1};
  CHECK(linear_compare(r, z, {Word(2), 0}) > 0);
}

TEST_CASE("cofinality and the quotient order") {
  const Realization r = standard_realization(kSchottky);
  for (const Word& g : ball(2, 3)) {
    const long n = cofinality_bound(r, g);
    CHECK(n >= 1);
    CHECK(linear_compare(r, {Word(2), -n}, {g, 0}) < 0);
    CHECK(linear_compare(r, {g, 0}, {Word(2), n}) < 0);
  }
  const auto words = ball(2, 2);
  for (const Word& x : words) {
    for (const Word& y : words) {
      for (const Word& z : words) {
        if (x == y || y == z || x == z) continue;
        REQUIRE(quotient_circular(r, x, y, z) == circular_order(r, x, y, z));
      }
    }
  }
  CHECK_THROWS_AS(quotient_circular(r, w("a"), w("a"), w("b")), std::invalid_argument);
}
