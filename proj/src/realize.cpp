#include "pingpong/realize.hpp"

#include <algorithm>

namespace pingpong {

namespace {

std::string letter_text(Letter s) { return std::string(1, s.to_char()); }

std::string interval_text(const CircleInterval& x) {
  return "[" + to_string(x.start) + ", " + to_string(mod1(x.start + x.length)) + "]";
}

std::vector<CircleInterval> sorted_by_start(std::vector<CircleInterval> v) {
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.start < y.start; });
  return v;
}

/// Closed components of the complement of a union of open arcs, sorted by
/// start. Entry i follows component i of the (sorted) input.
std::vector<CircleInterval> complement_gaps(const std::vector<CircleInterval>& sorted) {
  std::vector<CircleInterval> gaps;
  const std::size_t k = sorted.size();
  for (std::size_t i = 0; i < k; ++i) {
    const CircleInterval& cur = sorted[i];
    const CircleInterval& next = sorted[(i + 1) % k];
    Rational len = mod1(next.start - (cur.start + cur.length));
    if (k == 1) len = 1 - cur.length;
    if (len > 0) gaps.emplace_back(cur.start + cur.length, len);
  }
  return gaps;
}

}  // namespace

Realization::Realization(Configuration cfg, std::vector<CircleInterval> arcs, Layout layout)
    : cfg_(std::move(cfg)), layout_(layout), arcs_(std::move(arcs)), basepoint_(Rational(0)) {
  const ArcIndex index(cfg_);
  const int n = cfg_.rank;
  maps_.resize(2 * n);
  for (int a = 0; a < n; ++a) {
    const Letter pos(a, false);
    const Letter neg = pos.inverse();
    const int k = index.count(pos);
    std::vector<std::pair<Rational, Rational>> bps;
    for (int i = 0; i < k; ++i) {
      // Arc i of D(a^{-1}) is carried onto the gap of D(a) between the arcs
      // assigned to the gaps on either side of it.
      const CircleInterval& src = arcs_[index.arc_of(neg, i).value];
      const CircleInterval& left = arcs_[index.arc_of(pos, index.assigned_occurrence(pos, i - 1)).value];
      const CircleInterval& right = arcs_[index.arc_of(pos, index.assigned_occurrence(pos, i)).value];
      bps.emplace_back(src.start, left.start + left.length);
      bps.emplace_back(src.start + src.length, right.start);
    }
    maps_[pos.code()] = PLCircleMap(bps);
    maps_[neg.code()] = maps_[pos.code()].inverse();
  }

  bool first = true;
  for (int p = 0; p < index.arc_count(); ++p) {
    const Letter s = index.letter(ArcId{p}).inverse();
    const CircleInterval img = image(maps_[s.code()], arcs_[p]);
    const Rational slope = img.length / arcs_[p].length;
    if (maps_[s.code()].slope_right(arcs_[p].start) != slope) {
      throw InternalError("realization is not affine on a domain arc");
    }
    if (first || slope < mu_) mu_ = slope;
    first = false;
  }
  if (mu_ <= 1) throw InternalError("realization fails to expand: mu = " + to_string(mu_));
}

std::vector<CircleInterval> Realization::domain(Letter s) const {
  std::vector<CircleInterval> out;
  for (std::size_t p = 0; p < arcs_.size(); ++p) {
    if (cfg_.word[p] == s) out.push_back(arcs_[p]);
  }
  return out;
}

Action Realization::action() const {
  Action act;
  act.rank = cfg_.rank;
  for (int a = 0; a < cfg_.rank; ++a) act.maps.push_back(maps_[Letter(a, false).code()]);
  for (int code = 0; code < 2 * cfg_.rank; ++code) act.domains.push_back(domain(Letter::from_code(code)));
  return act;
}

Realization standard_realization(const Configuration& cfg, Layout layout) {
  require_valid(cfg);
  const long m = static_cast<long>(cfg.word.size());
  const long parts = layout == Layout::standard ? 3 : 5;
  const long lead = layout == Layout::standard ? 1 : 2;
  std::vector<CircleInterval> arcs;
  arcs.reserve(m);
  for (long j = 0; j < m; ++j) {
    arcs.emplace_back(make_rational(parts * j + lead, parts * m), make_rational(1, parts * m));
  }
  return Realization(cfg, std::move(arcs), layout);
}

CirclePoint apply(const Realization& r, const Word& w, const CirclePoint& x) {
  if (w.rank() != r.config().rank) throw std::invalid_argument("word rank does not match realization");
  CirclePoint y = x;
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) y = r.map(*it)(y);
  return y;
}

CircleInterval image_of_interval(const Realization& r, Letter s, const CircleInterval& interval) {
  return image(r.map(s), interval);
}

std::vector<PingPongViolation> verify_pingpong(const Action& action) {
  using Kind = PingPongViolation::Kind;
  std::vector<PingPongViolation> out;
  const int n = action.rank;
  const CircleInterval whole(Rational(0), Rational(1));
  if (n < 1 || static_cast<int>(action.maps.size()) != n ||
      static_cast<int>(action.domains.size()) != 2 * n) {
    out.push_back({Kind::missing_data, std::nullopt, whole,
                   "expected one map per generator and one domain per letter"});
    return out;
  }

  struct Tagged {
    CircleInterval arc;
    Letter letter;
  };
  std::vector<Tagged> all;
  for (int code = 0; code < 2 * n; ++code) {
    const Letter s = Letter::from_code(code);
    if (action.domains[code].empty()) {
      out.push_back({Kind::missing_data, s, whole, "D(" + letter_text(s) + ") is empty"});
    }
    for (const auto& arc : action.domains[code]) {
      if (arc.length >= 1) {
        out.push_back({Kind::overlap, s, arc, "D(" + letter_text(s) + ") has a full-circle component"});
      }
      all.push_back({arc, s});
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const auto& x = all[i];
      const auto& y = all[j];
      const std::string names = "components " + interval_text(x.arc) + " of D(" + letter_text(x.letter) +
                                ") and " + interval_text(y.arc) + " of D(" + letter_text(y.letter) + ")";
      if (open_intervals_meet(x.arc, y.arc)) {
        out.push_back({Kind::overlap, x.letter, y.arc, names + " overlap"});
      } else if (closures_meet(x.arc, y.arc)) {
        out.push_back({Kind::touching_closures, x.letter, y.arc, names + " have touching closures"});
      }
    }
  }
  if (!out.empty()) return out;

  for (int code = 0; code < 2 * n; ++code) {
    const Letter s = Letter::from_code(code);
    const PLCircleMap f = s.inverted() ? action.maps[s.generator()].inverse() : action.maps[s.generator()];
    const auto& target = action.domains[code];
    for (const auto& gap : complement_gaps(sorted_by_start(action.domains[s.inverse().code()]))) {
      const CircleInterval img = image(f, gap);
      const bool inside = std::any_of(target.begin(), target.end(),
                                      [&](const CircleInterval& c) { return closed_contains(c, img); });
      if (!inside) {
        out.push_back({Kind::inclusion, s, img,
                       letter_text(s) + " maps " + interval_text(gap) + " onto " + interval_text(img) +
                           ", outside the closure of D(" + letter_text(s) + ")"});
      }
    }
  }
  return out;
}

Configuration extract_config(const Action& action) {
  if (const auto violations = verify_pingpong(action); !violations.empty()) {
    throw ExtractionError("not a ping-pong action: " + violations.front().message);
  }
  const int n = action.rank;
  std::vector<std::vector<CircleInterval>> domains(2 * n);
  for (int a = 0; a < n; ++a) {
    const Letter pos(a, false);
    const Letter neg = pos.inverse();
    domains[neg.code()] = sorted_by_start(action.domains[neg.code()]);
    for (const auto& gap : complement_gaps(domains[neg.code()])) {
      domains[pos.code()].push_back(image(action.maps[a], gap));
    }
    domains[pos.code()] = sorted_by_start(std::move(domains[pos.code()]));
  }

  struct Tagged {
    CircleInterval arc;
    Letter letter;
  };
  std::vector<Tagged> all;
  for (int code = 0; code < 2 * n; ++code) {
    for (const auto& arc : domains[code]) all.push_back({arc, Letter::from_code(code)});
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (closures_meet(all[i].arc, all[j].arc)) {
        throw ExtractionError("normalized domains " + interval_text(all[i].arc) + " and " +
                              interval_text(all[j].arc) + " have touching closures");
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.arc.start < y.arc.start; });

  Configuration cfg{n, {}, std::vector<int>(n, 0)};
  for (const auto& t : all) cfg.word.push_back(t.letter);
  if (auto v = validate(cfg); !v.empty()) throw ExtractionError("extracted word invalid: " + v.front().message);

  for (int a = 0; a < n; ++a) {
    const Letter pos(a, false);
    const auto gaps = complement_gaps(domains[pos.inverse().code()]);
    const auto& targets = domains[pos.code()];
    const int k = static_cast<int>(targets.size());
    for (int i = 0; i < k; ++i) {
      const Rational y = action.maps[a](CirclePoint(gaps[i].midpoint())).value();
      const auto hit = std::find_if(targets.begin(), targets.end(),
                                    [&](const CircleInterval& c) { return open_contains(c, y); });
      if (hit == targets.end()) throw ExtractionError("gap image misses every normalized arc");
      const int j = static_cast<int>(hit - targets.begin());
      const int o = ((j - i) % k + k) % k;
      if (i == 0) {
        cfg.offsets[a] = o;
      } else if (o != cfg.offsets[a]) {
        throw ExtractionError("generator assignment is not a rotation");
      }
    }
  }
  return canonical_form(cfg);
}

std::vector<std::vector<CoverPiece>> minimal_set_cover(const Realization& r, int depth) {
  if (depth < 0) throw std::invalid_argument("cover depth must be nonnegative");
  const int n = r.config().rank;
  const int m = static_cast<int>(r.arcs().size());
  std::vector<std::vector<CoverPiece>> levels(1);
  for (int p = 0; p < m; ++p) levels[0].push_back({r.arcs()[p], r.config().word[p], -1});
  // child[i][code]: index in the next level of s(piece i), or -1
  std::vector<std::vector<int>> child;
  for (int d = 0; d < depth; ++d) {
    const auto& cur = levels.back();
    std::vector<CoverPiece> next;
    std::vector<std::vector<int>> next_child(cur.size(), std::vector<int>(2 * n, -1));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (int code = 0; code < 2 * n; ++code) {
        const Letter s = Letter::from_code(code);
        if (cur[i].letter == s.inverse()) continue;
        const CircleInterval img = image(r.map(s), cur[i].interval);
        // s(C) lies in s(container of C); at the first level, in an arc of D(s)
        int container = -1;
        if (d == 0) {
          for (int p = 0; p < m && container < 0; ++p) {
            if (r.config().word[p] == s && closed_contains(r.arcs()[p], img)) container = p;
          }
          if (container < 0) throw InternalError("cover piece outside every domain arc");
        } else {
          container = child[cur[i].parent][code];
        }
        next_child[i][code] = static_cast<int>(next.size());
        next.push_back({img, s, container});
      }
    }
    child = std::move(next_child);
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace pingpong
