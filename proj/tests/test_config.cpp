#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pingpong/config.hpp"
#include "pingpong/search.hpp"
#include "pingpong/surface.hpp"

using namespace pingpong;

namespace {

const Configuration kSchottky = make_configuration(2, "abAB", {0, 0});
const Configuration kExotic = make_configuration(2, "BABabAba", {0, 1});

bool has_message(const std::vector<Violation>& v, const std::string& text) {
  for (const auto& x : v) {
    if (x.message.find(text) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(kSchottky).empty());
  CHECK(validate(kExotic).empty());

  const auto bad = validate(make_configuration(2, "aabB", {0, 0}));
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].message == "k(a)=2 != k(a^{-1})=0");
  CHECK(bad[0].letter == Letter(0, false));

  CHECK(has_message(validate(make_configuration(2, "abAB", {1, 0})), "not reduced mod k=1"));
  CHECK(has_message(validate(make_configuration(2, "abAB", {0})), "expected 2 offsets"));
  CHECK(has_message(validate(make_configuration(1, "aA", {0})), "rank 1"));
  CHECK(has_message(validate(make_configuration(2, "aAbBcC", {0, 0})), "exceeds rank"));
  CHECK(has_message(validate(make_configuration(3, "aAbB", {0, 0, 0})), "no domain arcs"));
  CHECK_THROWS_AS(require_valid(make_configuration(2, "aabB", {0, 0})), InvalidConfiguration);
}

TEST_CASE("gamma graph of the classical configuration") {
  const GammaCycle cycle = gamma_graph(kSchottky, 0);
  REQUIRE(cycle.vertices.size() == 2);
  CHECK(cycle.vertices[0].value == 0);  // a-arc
  CHECK(cycle.vertices[1].value == 2);  // A-arc
}

TEST_CASE("gamma graph of the exotic configuration matches the realization") {
  const Realization r = standard_realization(kExotic);
  const GammaCycle cycle = gamma_graph(kExotic, 1);
  REQUIRE(cycle.vertices.size() == 4);
  for (std::size_t i = 0; i < cycle.vertices.size(); ++i) {
    const auto expected = oracle::realized_graph_successor(r, cycle.vertices[i].value);
    REQUIRE(expected.has_value());
    CHECK(*expected == cycle.vertices[(i + 1) % 4].value);
  }
  // Frozen from the realization oracle: b(4) -> B(0) -> b(6) -> B(2).
  std::vector<int> order;
  for (ArcId v : cycle.vertices) order.push_back(v.value);
  CHECK(order == std::vector<int>{4, 0, 6, 2});
}

TEST_CASE("gamma graphs are single 2k-cycles that agree with the realization") {
  enumerate_configs({2, std::nullopt, 8}, [](const Configuration& cfg) {
    const Realization r = standard_realization(cfg);
    for (int a = 0; a < cfg.rank; ++a) {
      const GammaCycle cycle = gamma_graph(cfg, a);
      const ArcIndex index(cfg);
      REQUIRE(static_cast<int>(cycle.vertices.size()) == 2 * index.count(Letter(a, false)));
      for (std::size_t i = 0; i < cycle.vertices.size(); ++i) {
        const auto expected = oracle::realized_graph_successor(r, cycle.vertices[i].value);
        REQUIRE(expected.has_value());
        REQUIRE(*expected == cycle.vertices[(i + 1) % cycle.vertices.size()].value);
      }
    }
  });
}

TEST_CASE("lambda assignments") {
  const LambdaTable schottky = lambda_assignments(kSchottky);
  const Letter a(0, false);
  for (int p : {0, 1, 3}) CHECK(schottky.at(a, ArcId{p})->value == 0);
  CHECK_FALSE(schottky.at(a, ArcId{2}).has_value());

  const Realization r = standard_realization(kExotic);
  const LambdaTable exotic = lambda_assignments(kExotic);
  const Letter b(1, false);
  const auto target = exotic.at(b, ArcId{3});
  REQUIRE(target.has_value());
  CHECK(kExotic.word[target->value] == b);
  CHECK(oracle::arc_containing(r, image(r.map(b), r.arcs()[3])) == target->value);
}

TEST_CASE("lambda assignments agree with realized images") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Configuration cfg = random_configuration(2 + trial % 2, 2, rng);
    const Realization r = standard_realization(cfg);
    const LambdaTable lambda = lambda_assignments(cfg);
    const int m = static_cast<int>(cfg.word.size());
    for (int code = 0; code < 2 * cfg.rank; ++code) {
      const Letter s = Letter::from_code(code);
      for (int p = 0; p < m; ++p) {
        const auto target = lambda.at(s, ArcId{p});
        if (cfg.word[p] == s.inverse()) {
          CHECK_FALSE(target.has_value());
          continue;
        }
        REQUIRE(target.has_value());
        CHECK(cfg.word[target->value] == s);
        CHECK(oracle::arc_containing(r, image(r.map(s), r.arcs()[p])) == target->value);
      }
    }
  }
}

TEST_CASE("alternation") {
  CHECK(is_alternating(kSchottky, 0));
  CHECK(is_alternating(kSchottky, 1));
  CHECK_FALSE(is_alternating(kExotic, 1));
  CHECK(is_alternating(kExotic, 0));
}

TEST_CASE("canonical form") {
  const Configuration rotated = make_configuration(2, "bABa", {0, 0});
  CHECK(canonical_form(rotated) == kSchottky);
  CHECK(canonical_form(kSchottky) == kSchottky);

  const Configuration c = canonical_form(kExotic);
  CHECK(canonical_form(c) == c);
  CHECK(word_string(c) == "abAbaBAB");
  const Verdict before = classify(kExotic);
  const Verdict after = classify(c);
  CHECK(before.boundary_count == after.boundary_count);
  CHECK(before.genus == after.genus);
  CHECK(before.isolated == after.isolated);
}

TEST_CASE("rotations preserve the action and the verdict") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Configuration cfg = random_configuration(2 + trial % 2, 3, rng);
    const Verdict v = classify(cfg);
    const LambdaTable lambda = lambda_assignments(cfg);
    const int m = static_cast<int>(cfg.word.size());
    for (int shift = 0; shift < m; ++shift) {
      const Configuration rot = rotate(cfg, shift);
      CHECK(validate(rot).empty());
      CHECK(canonical_form(rot) == canonical_form(cfg));
      CHECK(classify(rot).boundary_count == v.boundary_count);
      // lambda is the same assignment up to the shift of positions
      const LambdaTable rl = lambda_assignments(rot);
      for (int code = 0; code < 2 * cfg.rank; ++code) {
        for (int p = 0; p < m; ++p) {
          const auto orig = lambda.table[code][(p + shift) % m];
          const auto moved = rl.table[code][p];
          REQUIRE(orig.has_value() == moved.has_value());
          if (orig) CHECK((moved->value + shift) % m == orig->value);
        }
      }
    }
  }
}

TEST_CASE("every offset tuple of a word is valid and realizable") {
  const Configuration base = make_configuration(2, "aabABbAB", {0, 0});
  for (int oa = 0; oa < 3; ++oa) {
    for (int ob = 0; ob < 3; ++ob) {
      Configuration cfg = base;
      cfg.offsets = {oa, ob};
      const bool in_range = oa < 2 && ob < 2;
      CHECK(validate(cfg).empty() == in_range);
      if (in_range) CHECK_NOTHROW(standard_realization(cfg));
    }
  }
}
