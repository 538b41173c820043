#include "pingpong/circle.hpp"

#include <algorithm>
#include <stdexcept>

namespace pingpong {

int ord(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) {
  if (x == y || y == z || x == z) return 0;
  const Rational dy = mod1(y.value() - x.value());
  const Rational dz = mod1(z.value() - x.value());
  return dy < dz ? 1 : -1;
}

CircleInterval::CircleInterval(const Rational& from, const Rational& len)
    : start(mod1(from)), length(len) {
  if (length <= 0 || length > 1) {
    throw std::invalid_argument("arc length must lie in (0, 1], got " + to_string(length));
  }
}

CircleInterval CircleInterval::between(const Rational& from, const Rational& to) {
  Rational len = mod1(to - from);
  if (len == 0) len = 1;
  return {from, len};
}

bool closed_contains(const CircleInterval& interval, const Rational& x) {
  return mod1(x - interval.start) <= interval.length;
}

bool open_contains(const CircleInterval& interval, const Rational& x) {
  const Rational d = mod1(x - interval.start);
  return d > 0 && d < interval.length;
}

bool closed_contains(const CircleInterval& outer, const CircleInterval& inner) {
  if (outer.length == 1) return true;
  return Rational(mod1(inner.start - outer.start) + inner.length) <= outer.length;
}

bool open_intervals_meet(const CircleInterval& x, const CircleInterval& y) {
  return mod1(y.start - x.start) < x.length || mod1(x.start - y.start) < y.length;
}

bool closures_meet(const CircleInterval& x, const CircleInterval& y) {
  return closed_contains(x, y.start) || closed_contains(y, x.start);
}

PLCircleMap::PLCircleMap() : in_{0}, out_{0} {}

PLCircleMap::PLCircleMap(const std::vector<std::pair<Rational, Rational>>& breakpoints) {
  if (breakpoints.empty()) throw std::invalid_argument("circle map needs a breakpoint");
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(breakpoints.size());
  for (const auto& [x, y] : breakpoints) pts.emplace_back(mod1(x), mod1(y));
  std::sort(pts.begin(), pts.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].first == pts[i - 1].first) {
      throw std::invalid_argument("repeated breakpoint input " + to_string(pts[i].first));
    }
  }

  std::vector<Rational> in;
  std::vector<Rational> out;
  in.push_back(pts[0].first);
  out.push_back(pts[0].second);
  Rational turn = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Rational step = mod1(pts[i].second - pts[i - 1].second);
    if (step == 0) throw std::invalid_argument("breakpoint outputs collide");
    turn += step;
    in.push_back(pts[i].first);
    out.push_back(out.back() + step);
  }
  if (pts.size() > 1) {
    const Rational closing = mod1(pts[0].second - pts.back().second);
    if (closing == 0 || turn + closing != 1) {
      throw std::invalid_argument("breakpoint outputs are not cyclically increasing");
    }
  }

  // Drop breakpoints where the slope does not change.
  const std::size_t p = in.size();
  auto point = [&](std::size_t i, int turns) {
    return std::pair<Rational, Rational>(in[i] + turns, out[i] + turns);
  };
  auto slope = [](const std::pair<Rational, Rational>& u, const std::pair<Rational, Rational>& v) {
    return Rational((v.second - u.second) / (v.first - u.first));
  };
  std::vector<bool> keep(p, true);
  std::size_t kept = p;
  if (p > 1) {
    for (std::size_t i = 0; i < p; ++i) {
      const auto prev = i == 0 ? point(p - 1, -1) : point(i - 1, 0);
      const auto next = i + 1 == p ? point(0, 1) : point(i + 1, 0);
      if (slope(prev, point(i, 0)) == slope(point(i, 0), next)) {
        keep[i] = false;
        --kept;
      }
    }
  } else {
    keep[0] = false;
    kept = 0;
  }
  if (kept == 0) {
    // A rotation: represent by its value at 0.
    in_ = {Rational(0)};
    out_ = {out[0] - in[0]};
  } else {
    for (std::size_t i = 0; i < p; ++i) {
      if (keep[i]) {
        in_.push_back(in[i]);
        out_.push_back(out[i]);
      }
    }
  }

  const Rational shift(pingpong::floor(lift(0)));
  for (auto& y : out_) y -= shift;
}

Rational PLCircleMap::lift(const Rational& x) const {
  const mpz_class turns = pingpong::floor(x);
  const Rational u = x - Rational(turns);
  const auto it = std::upper_bound(in_.begin(), in_.end(), u);
  const std::size_t p = in_.size();
  Rational xl, yl, xr, yr;
  if (it == in_.begin()) {
    xl = in_[p - 1] - 1;
    yl = out_[p - 1] - 1;
    xr = in_[0];
    yr = out_[0];
  } else {
    const std::size_t i = static_cast<std::size_t>(it - in_.begin()) - 1;
    xl = in_[i];
    yl = out_[i];
    if (i + 1 < p) {
      xr = in_[i + 1];
      yr = out_[i + 1];
    } else {
      xr = in_[0] + 1;
      yr = out_[0] + 1;
    }
  }
  return yl + (u - xl) * (yr - yl) / (xr - xl) + Rational(turns);
}

Rational PLCircleMap::slope_right(const Rational& x) const {
  const Rational u = mod1(x);
  const auto it = std::upper_bound(in_.begin(), in_.end(), u);
  const std::size_t p = in_.size();
  if (it == in_.begin()) {
    return (out_[0] - out_[p - 1] + 1) / (in_[0] - in_[p - 1] + 1);
  }
  const std::size_t i = static_cast<std::size_t>(it - in_.begin()) - 1;
  if (i + 1 < p) return (out_[i + 1] - out_[i]) / (in_[i + 1] - in_[i]);
  return (out_[0] + 1 - out_[i]) / (in_[0] + 1 - in_[i]);
}

PLCircleMap PLCircleMap::inverse() const {
  std::vector<std::pair<Rational, Rational>> swapped;
  swapped.reserve(in_.size());
  for (std::size_t i = 0; i < in_.size(); ++i) swapped.emplace_back(out_[i], in_[i]);
  if (in_.size() == 1) {
    // A rotation carries no intrinsic breakpoint; keep a second point so the
    // constructor does not read it as the identity translation.
    swapped.emplace_back(out_[0] + Rational(1, 2), in_[0] + Rational(1, 2));
  }
  return PLCircleMap(swapped);
}

std::vector<std::pair<Rational, Rational>> PLCircleMap::breakpoints() const {
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(in_.size());
  for (std::size_t i = 0; i < in_.size(); ++i) pts.emplace_back(in_[i], mod1(out_[i]));
  return pts;
}

PLCircleMap compose(const PLCircleMap& f, const PLCircleMap& g) {
  std::vector<Rational> inputs;
  for (const auto& [x, y] : g.breakpoints()) inputs.push_back(x);
  const PLCircleMap g_inv = g.inverse();
  for (const auto& [x, y] : f.breakpoints()) inputs.push_back(g_inv(CirclePoint(x)).value());
  std::sort(inputs.begin(), inputs.end());
  inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(inputs.size() + 1);
  for (const auto& x : inputs) pts.emplace_back(x, f.lift(g.lift(x)));
  if (pts.size() == 1) {
    const Rational x = pts[0].first + Rational(1, 2);
    pts.emplace_back(x, f.lift(g.lift(x)));
  }
  return PLCircleMap(pts);
}

CircleInterval image(const PLCircleMap& f, const CircleInterval& interval) {
  const Rational a = f.lift(interval.start);
  const Rational b = f.lift(interval.start + interval.length);
  return {a, b - a};
}

LiftedMap LiftedMap::inverse() const {
  PLCircleMap inv = map.inverse();
  // inv.lift(map.lift(0)) differs from 0 by an integer.
  const mpz_class e = pingpong::floor(inv.lift(map.lift(0)));
  return {std::move(inv), -shift - e};
}

LiftedMap compose(const LiftedMap& f, const LiftedMap& g) {
  PLCircleMap c = compose(f.map, g.map);
  const mpz_class e = pingpong::floor(f.map.lift(g.map.lift(0)) - c.lift(0));
  return {std::move(c), f.shift + g.shift + e};
}

}  // namespace pingpong
