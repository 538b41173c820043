#pragma once

#include <utility>
#include <vector>

#include "pingpong/rational.hpp"

namespace pingpong {

/// A point of R/Z, stored as its representative in [0, 1).
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(const Rational& x) : value_(mod1(x)) {}

  const Rational& value() const { return value_; }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

 private:
  Rational value_;
};

/// Cyclic orientation of three points: +1 if x, y, z are met in this order
/// counterclockwise, -1 if clockwise, 0 if two of them coincide.
int ord(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z);

/// The arc swept counterclockwise from `start` through `length` (0 < length <= 1).
/// Openness is a matter of interpretation at the call site.
struct CircleInterval {
  Rational start;
  Rational length;

  CircleInterval() = default;
  CircleInterval(const Rational& from, const Rational& len);

  /// Arc from `from` counterclockwise to `to`; full circle when they coincide.
  static CircleInterval between(const Rational& from, const Rational& to);

  Rational end() const { return mod1(start + length); }
  Rational midpoint() const { return mod1(start + length / 2); }

  friend bool operator==(const CircleInterval&, const CircleInterval&) = default;
};

bool closed_contains(const CircleInterval& interval, const Rational& x);
bool open_contains(const CircleInterval& interval, const Rational& x);
/// Closed containment of `inner` in `outer`.
bool closed_contains(const CircleInterval& outer, const CircleInterval& inner);
bool open_intervals_meet(const CircleInterval& x, const CircleInterval& y);
bool closures_meet(const CircleInterval& x, const CircleInterval& y);

/// Orientation-preserving piecewise-linear homeomorphism of the circle.
///
/// Stored as its canonical lift to the line (value at 0 in [0, 1)),
/// restricted to the breakpoints in [0, 1) where the slope changes. The
/// representation is unique, so equality of values is equality of maps.
class PLCircleMap {
 public:
  /// Identity.
  PLCircleMap();

  /// Breakpoint pairs (input, output) as circle points, in any order.
  /// Throws std::invalid_argument unless inputs are distinct and outputs are
  /// strictly cyclically increasing with total turn exactly one.
  explicit PLCircleMap(const std::vector<std::pair<Rational, Rational>>& breakpoints);

  /// Canonical lift evaluated on the line.
  Rational lift(const Rational& x) const;
  CirclePoint operator()(const CirclePoint& x) const { return CirclePoint(lift(x.value())); }

  /// Slope of the affine piece starting at x (right derivative).
  Rational slope_right(const Rational& x) const;

  PLCircleMap inverse() const;

  /// Breakpoints as (input, output) circle points, sorted by input.
  std::vector<std::pair<Rational, Rational>> breakpoints() const;

  friend bool operator==(const PLCircleMap&, const PLCircleMap&) = default;

 private:
  std::vector<Rational> in_;   // sorted, in [0, 1)
  std::vector<Rational> out_;  // lifted, strictly increasing, span < 1
};

/// f after g.
PLCircleMap compose(const PLCircleMap& f, const PLCircleMap& g);

/// Image of an arc under an orientation-preserving homeomorphism.
CircleInterval image(const PLCircleMap& f, const CircleInterval& interval);

/// A specific lift of a circle map: x -> map.lift(x) + shift. Commutes with
/// unit translation and is closed under composition and inversion.
struct LiftedMap {
  PLCircleMap map;
  mpz_class shift;

  Rational operator()(const Rational& x) const { return map.lift(x) + Rational(shift); }
  LiftedMap inverse() const;
};

/// f after g.
LiftedMap compose(const LiftedMap& f, const LiftedMap& g);

}  // namespace pingpong
