#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "pingpong/json_io.hpp"
#include "pingpong/realize.hpp"
#include "pingpong/search.hpp"

using namespace pingpong;

namespace {

Rational q(long p, long d) { return make_rational(p, d); }

const Configuration kSchottky = make_configuration(2, "abAB", {0, 0});
const Configuration kExotic = make_configuration(2, "BABabAba", {0, 1});
const Letter a(0, false), A(0, true), b(1, false), B(1, true);

bool has_kind(const std::vector<PingPongViolation>& v, PingPongViolation::Kind kind) {
  for (const auto& x : v) {
    if (x.kind == kind) return true;
  }
  return false;
}

Rational max_length(const std::vector<CoverPiece>& pieces) {
  Rational best = 0;
  for (const auto& p : pieces) best = std::max(best, p.interval.length);
  return best;
}

}  // namespace

TEST_CASE("standard layout of the classical configuration") {
  const Realization r = standard_realization(kSchottky);
  REQUIRE(r.arcs().size() == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(r.arcs()[j].start == q(3 * j + 1, 12));
    CHECK(r.arcs()[j].length == q(1, 12));
  }
  CHECK(r.basepoint().value() == 0);
  // the A-arc of length 1/12 is stretched over the complement of D(a), length 11/12
  CHECK(r.map(a).slope_right(q(7, 12)) == 11);
  CHECK(r.mu() > 1);
  CHECK(r.mu() == 11);
  CHECK(compose(r.map(a), r.map(A)) == PLCircleMap());
  CHECK(r.map(A) == r.map(a).inverse());

  const Realization p = standard_realization(kSchottky, Layout::perturbed);
  CHECK(p.arcs()[1].start == q(7, 20));
  CHECK(p.arcs()[1].length == q(1, 20));
}

TEST_CASE("realizations are ping-pong actions with the right domains") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const Configuration cfg = random_configuration(2 + trial % 3, 3, rng);
    for (Layout layout : {Layout::standard, Layout::perturbed}) {
      const Realization r = standard_realization(cfg, layout);
      CHECK(r.mu() > 1);
      const auto violations = verify_pingpong(r.action());
      CHECK(violations.empty());
      for (int code = 0; code < 2 * cfg.rank; ++code) {
        const Letter s = Letter::from_code(code);
        CHECK(compose(r.map(s), r.map(s.inverse())) == PLCircleMap());
        // every arc of D(s^{-1}) is stretched over the closure of a gap of D(s)
        for (const CircleInterval& arc : r.domain(s.inverse())) {
          const CircleInterval im = image(r.map(s), arc);
          CHECK(im.length >= arc.length * r.mu());
          for (const CircleInterval& d : r.domain(s)) CHECK_FALSE(open_intervals_meet(im, d));
        }
      }
    }
  }
}

TEST_CASE("verify_pingpong detects broken actions") {
  const Realization r = standard_realization(kSchottky);
  const Action good = r.action();
  CHECK(verify_pingpong(good).empty());

  Action shrunk = good;
  auto& da = shrunk.domains[a.code()];
  da[0] = CircleInterval(da[0].start, da[0].length / 2);
  const auto v1 = verify_pingpong(shrunk);
  CHECK(has_kind(v1, PingPongViolation::Kind::inclusion));

  Action overlap = good;
  overlap.domains[b.code()].push_back(CircleInterval(q(1, 12) + q(1, 48), q(1, 48)));
  CHECK(has_kind(verify_pingpong(overlap), PingPongViolation::Kind::overlap));

  Action touching = good;
  touching.domains[b.code()].push_back(CircleInterval(q(2, 12), q(1, 24)));
  CHECK(has_kind(verify_pingpong(touching), PingPongViolation::Kind::touching_closures));

  Action empty = good;
  empty.domains[B.code()].clear();
  CHECK(has_kind(verify_pingpong(empty), PingPongViolation::Kind::missing_data));
}

TEST_CASE("extraction") {
  const Realization r = standard_realization(kExotic);
  CHECK(extract_config(r.action()) == canonical_form(kExotic));

  // an arbitrary extra open set inside D(a)'s complement region is normalized away
  Action noisy = standard_realization(kSchottky).action();
  noisy.domains[a.code()].push_back(CircleInterval(q(1, 5), q(1, 10)));
  CHECK(verify_pingpong(noisy).empty());
  CHECK(extract_config(noisy) == kSchottky);

  Action broken = noisy;
  broken.domains[b.code()].clear();
  CHECK_THROWS_AS(extract_config(broken), ExtractionError);
}

TEST_CASE("extraction round trip over all small configurations") {
  int count = 0;
  enumerate_configs({2, std::nullopt, 6}, [&](const Configuration& cfg) {
    for (Layout layout : {Layout::standard, Layout::perturbed}) {
      REQUIRE(extract_config(standard_realization(cfg, layout).action()) == cfg);
    }
    ++count;
  });
  CHECK(count > 0);
}

TEST_CASE("action files round trip") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Configuration cfg = random_configuration(2 + trial % 2, 2, rng);
    const Action act = standard_realization(cfg).action();
    const Json doc = action_to_json(act);
    const Action back = action_from_json(doc);
    CHECK(back.maps == act.maps);
    CHECK(back.domains == act.domains);
    CHECK(action_to_json(back).dump() == doc.dump());
  }
}

TEST_CASE("minimal set cover") {
  const Realization r = standard_realization(kSchottky);
  const auto levels = minimal_set_cover(r, 5);
  REQUIRE(levels.size() == 6);
  CHECK(levels[0].size() == 4);
  CHECK(levels[1].size() == 12);
  CHECK(levels[2].size() == 36);
  const Rational base = max_length(levels[0]);
  Rational decay = 1;
  for (int d = 1; d <= 5; ++d) {
    decay /= r.mu();
    CHECK(max_length(levels[d]) <= base * decay);
    for (const auto& piece : levels[d]) {
      REQUIRE(piece.parent >= 0);
      const CoverPiece& parent = levels[d - 1][piece.parent];
      CHECK(closed_contains(parent.interval, piece.interval));
    }
  }
  // pieces within one level are pairwise disjoint
  for (std::size_t i = 0; i < levels[3].size(); ++i) {
    for (std::size_t j = i + 1; j < levels[3].size(); ++j) {
      CHECK_FALSE(open_intervals_meet(levels[3][i].interval, levels[3][j].interval));
    }
  }
}

TEST_CASE("the basepoint orbit is free") {
  for (const Configuration& cfg : {kSchottky, kExotic}) {
    const Realization r = standard_realization(cfg);
    std::set<Rational> seen;
    const auto words = ball(2, 6);
    for (const Word& w : words) seen.insert(apply(r, w, r.basepoint()).value());
    CHECK(seen.size() == words.size());
  }
}

TEST_CASE("apply acts on the left") {
  const Realization r = standard_realization(kExotic);
  const Word u = Word::parse(2, "abA");
  const Word v = Word::parse(2, "Bba");
  const CirclePoint x(q(3, 7));
  CHECK(apply(r, u * v, x) == apply(r, u, apply(r, v, x)));
  CHECK(apply(r, Word::parse(2, "b"), x) == r.map(b)(x));
  CHECK(image_of_interval(r, b, r.arcs()[0]) == image(r.map(b), r.arcs()[0]));
}
