#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pingpong/circle.hpp"
#include "pingpong/freegroup.hpp"
#include "pingpong/realize.hpp"

namespace pingpong {

/// Value of a circular order on a triple.
enum class CircularValue : int { clockwise = -1, degenerate = 0, counterclockwise = 1 };

inline int to_int(CircularValue v) { return static_cast<int>(v); }

/// Induced order c(g1, g2, g3) = ord(g1 x, g2 x, g3 x) at the basepoint.
CircularValue circular_order(const Realization& r, const Word& g1, const Word& g2, const Word& g3);

/// Caches basepoint images for repeated queries over a fixed word list.
class BasepointOrbit {
 public:
  BasepointOrbit(const Realization& r, std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }
  const CirclePoint& point(std::size_t i) const { return points_[i]; }
  /// ord of the images of words i, j, l.
  int ord(std::size_t i, std::size_t j, std::size_t l) const;

 private:
  std::vector<Word> words_;
  std::vector<CirclePoint> points_;
};

struct CocycleCounterexample {
  std::string identity;  // "cocycle", "homogeneity" or "non-degeneracy"
  std::vector<Word> words;
};

/// Cocycle identity on all quadruples of ball(n, radius); homogeneity on all
/// triples for `multipliers` random left multipliers of length <= radius + 1
/// (seeded); non-degeneracy on all triples.
std::optional<CocycleCounterexample> cocycle_check(const Realization& r, int radius,
                                                   int multipliers = 20, unsigned seed = 1);

/// (g, m) in F_n x Z, with m the central coordinate.
struct CentralElement {
  Word g;
  long m = 0;

  /// "word" or "word:m"; "1" or an empty word denotes the identity.
  static CentralElement parse(int rank, std::string_view text);
  std::string to_string() const;
};

CentralElement operator*(const CentralElement& u, const CentralElement& v);

/// Lift of a generator letter: generators use the lift with value at 0 in
/// [0, 1), inverse letters the inverse of that lift.
LiftedMap letter_lift(const Realization& r, Letter s);

/// Lift of a word: product of letter lifts.
LiftedMap word_lift(const Realization& r, const Word& w);

/// lift(g)(0) + m.
Rational lifted_value(const Realization& r, const CentralElement& u);

/// Sign of lifted_value(u) - lifted_value(v).
int linear_compare(const Realization& r, const CentralElement& u, const CentralElement& v);

/// Smallest N >= 1 with (id, -N) < (g, 0) < (id, N).
long cofinality_bound(const Realization& r, const Word& g);

/// Circular order recovered from the linear order: each g is replaced by its
/// representative in [id, z) and the sign of the sorting permutation is
/// returned. Arguments must be distinct.
CircularValue quotient_circular(const Realization& r, const Word& g1, const Word& g2, const Word& g3);

/// First triple from ball(n, radius) where the two realizations disagree.
std::optional<std::array<Word, 3>> order_agreement(const Realization& a, const Realization& b, int radius);

}  // namespace pingpong
