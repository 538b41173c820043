#include "pingpong/orders.hpp"

#include <algorithm>
#include <stdexcept>

namespace pingpong {

namespace {

CircularValue as_value(int s) { return static_cast<CircularValue>(s); }

void require_rank(const Realization& r, const Word& w) {
  if (w.rank() != r.config().rank) throw std::invalid_argument("word rank does not match realization");
}

}  // namespace

CircularValue circular_order(const Realization& r, const Word& g1, const Word& g2, const Word& g3) {
  const CirclePoint& x = r.basepoint();
  return as_value(ord(apply(r, g1, x), apply(r, g2, x), apply(r, g3, x)));
}

BasepointOrbit::BasepointOrbit(const Realization& r, std::vector<Word> words) : words_(std::move(words)) {
  points_.reserve(words_.size());
  for (const auto& w : words_) points_.push_back(apply(r, w, r.basepoint()));
}

int BasepointOrbit::ord(std::size_t i, std::size_t j, std::size_t l) const {
  return pingpong::ord(points_[i], points_[j], points_[l]);
}

std::optional<CocycleCounterexample> cocycle_check(const Realization& r, int radius, int multipliers,
                                                   unsigned seed) {
  if (radius < 1) throw std::invalid_argument("radius must be at least 1");
  const int n = r.config().rank;
  const BasepointOrbit orbit(r, ball(n, radius));
  const auto& words = orbit.words();
  const std::size_t count = words.size();

  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      for (std::size_t l = 0; l < count; ++l) {
        const int c = orbit.ord(i, j, l);
        if ((c == 0) != (i == j || j == l || i == l)) {
          return CocycleCounterexample{"non-degeneracy", {words[i], words[j], words[l]}};
        }
      }
    }
  }

  for (std::size_t g0 = 0; g0 < count; ++g0) {
    for (std::size_t g1 = 0; g1 < count; ++g1) {
      for (std::size_t g2 = 0; g2 < count; ++g2) {
        const int c012 = orbit.ord(g0, g1, g2);
        for (std::size_t g3 = 0; g3 < count; ++g3) {
          const int lhs = orbit.ord(g1, g2, g3) - orbit.ord(g0, g2, g3) + orbit.ord(g0, g1, g3) - c012;
          if (lhs != 0) {
            return CocycleCounterexample{"cocycle", {words[g0], words[g1], words[g2], words[g3]}};
          }
        }
      }
    }
  }

  std::mt19937 rng(seed);
  const std::vector<Word> pool = ball(n, radius + 1);
  std::uniform_int_distribution<std::size_t> pick(1, pool.size() - 1);
  for (int t = 0; t < multipliers; ++t) {
    const Word& gamma = pool[pick(rng)];
    std::vector<Word> shifted;
    shifted.reserve(count);
    for (const auto& w : words) shifted.push_back(gamma * w);
    const BasepointOrbit moved(r, std::move(shifted));
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t l = 0; l < count; ++l) {
          if (moved.ord(i, j, l) != orbit.ord(i, j, l)) {
            return CocycleCounterexample{"homogeneity", {gamma, words[i], words[j], words[l]}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

CentralElement CentralElement::parse(int rank, std::string_view text) {
  const auto colon = text.find(':');
  CentralElement out{Word::parse(rank, text.substr(0, colon)), 0};
  if (colon != std::string_view::npos) {
    const std::string m(text.substr(colon + 1));
    std::size_t used = 0;
    try {
      out.m = std::stol(m, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (m.empty() || used != m.size()) {
      throw std::invalid_argument("malformed central coordinate in '" + std::string(text) + "'");
    }
  }
  return out;
}

std::string CentralElement::to_string() const {
  return (g.is_identity() ? std::string("1") : g.to_string()) + ":" + std::to_string(m);
}

CentralElement operator*(const CentralElement& u, const CentralElement& v) {
  return {u.g * v.g, u.m + v.m};
}

LiftedMap letter_lift(const Realization& r, Letter s) {
  LiftedMap base{r.map(Letter(s.generator(), false)), 0};
  return s.inverted() ? base.inverse() : base;
}

LiftedMap word_lift(const Realization& r, const Word& w) {
  require_rank(r, w);
  LiftedMap out{PLCircleMap(), 0};
  for (Letter s : w.letters()) out = compose(out, letter_lift(r, s));
  return out;
}

Rational lifted_value(const Realization& r, const CentralElement& u) {
  require_rank(r, u.g);
  Rational x = 0;
  const auto letters = u.g.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const Letter s = *it;
    const PLCircleMap& f = r.map(Letter(s.generator(), false));
    if (!s.inverted()) {
      x = f.lift(x);
    } else {
      // Inverse of the canonical lift: invert the circle map and correct by
      // the integer that makes the two lifts cancel.
      const PLCircleMap& g = r.map(s);
      const Rational y = g.lift(x);
      x = y - Rational(pingpong::floor(f.lift(y) - x));
    }
  }
  return x + u.m;
}

int linear_compare(const Realization& r, const CentralElement& u, const CentralElement& v) {
  return sgn(Rational(lifted_value(r, u) - lifted_value(r, v)));
}

long cofinality_bound(const Realization& r, const Word& g) {
  const Rational value = lifted_value(r, {g, 0});
  for (long n = 1;; ++n) {
    if (Rational(-n) < value && value < Rational(n)) return n;
  }
}

CircularValue quotient_circular(const Realization& r, const Word& g1, const Word& g2, const Word& g3) {
  if (g1 == g2 || g2 == g3 || g1 == g3) throw std::invalid_argument("quotient order needs distinct elements");
  std::array<Rational, 3> reps;
  const std::array<const Word*, 3> gs{&g1, &g2, &g3};
  for (int i = 0; i < 3; ++i) {
    const Rational value = lifted_value(r, {*gs[i], 0});
    // Unique m with id <= (g, m) < z.
    const long m = -pingpong::floor(value).get_si();
    reps[i] = lifted_value(r, {*gs[i], m});
  }
  std::array<int, 3> sigma{0, 1, 2};
  std::sort(sigma.begin(), sigma.end(), [&](int i, int j) { return reps[i] < reps[j]; });
  int inversions = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (sigma[i] > sigma[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? CircularValue::counterclockwise : CircularValue::clockwise;
}

std::optional<std::array<Word, 3>> order_agreement(const Realization& a, const Realization& b, int radius) {
  if (a.config().rank != b.config().rank) throw std::invalid_argument("rank mismatch");
  const std::vector<Word> words = ball(a.config().rank, radius);
  const BasepointOrbit oa(a, words);
  const BasepointOrbit ob(b, words);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      for (std::size_t l = 0; l < words.size(); ++l) {
        if (oa.ord(i, j, l) != ob.ord(i, j, l)) return std::array<Word, 3>{words[i], words[j], words[l]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace pingpong
