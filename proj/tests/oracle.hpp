#pragma once

// Independent references used only by the tests. Nothing here calls the
// combinatorial move rules, the graph construction or the enumerator; the
// realized action is the source of truth.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "pingpong/config.hpp"
#include "pingpong/realize.hpp"

namespace pingpong::oracle {

/// Outer gap g of a realization: from the end of arc g to the start of arc g+1.
inline CircleInterval outer_gap(const Realization& r, int g) {
  const auto& arcs = r.arcs();
  const int m = static_cast<int>(arcs.size());
  const CircleInterval& left = arcs[g];
  const CircleInterval& right = arcs[(g + 1) % m];
  return CircleInterval::between(left.start + left.length, right.start);
}

/// Inner approximation of the complementary component of the minimal set
/// that contains outer gap g: the gap between the nearest depth-d cover
/// pieces on either side.
inline CircleInterval lambda_gap(const Realization& r, const std::vector<CoverPiece>& cover, int g) {
  const CircleInterval gap = outer_gap(r, g);
  const Rational gap_end = gap.end();
  std::optional<Rational> best_lo, best_hi;
  Rational lo, hi;
  for (const auto& piece : cover) {
    const Rational back = mod1(gap.start - piece.interval.end());
    if (!best_lo || back < *best_lo) {
      best_lo = back;
      lo = piece.interval.end();
    }
    const Rational fwd = mod1(piece.interval.start - gap_end);
    if (!best_hi || fwd < *best_hi) {
      best_hi = fwd;
      hi = piece.interval.start;
    }
  }
  return CircleInterval::between(lo, hi);
}

/// Outer gaps lying entirely inside the interval.
inline std::vector<int> outer_gaps_inside(const Realization& r, const CircleInterval& x) {
  std::vector<int> out;
  for (int g = 0; g < static_cast<int>(r.arcs().size()); ++g) {
    if (closed_contains(x, outer_gap(r, g))) out.push_back(g);
  }
  return out;
}

/// Outer gaps sharing the complementary component of gap g. More than one
/// when an arc between them misses the minimal set (e.g. the arc fed by the
/// gap between two adjacent arcs of the same letter).
inline std::vector<int> lambda_class(const Realization& r, const std::vector<CoverPiece>& cover, int g) {
  return outer_gaps_inside(r, lambda_gap(r, cover, g));
}

struct RealizedMoves {
  std::vector<std::vector<int>> left;   // every outer gap found in the image
  std::vector<std::vector<int>> right;
  std::vector<std::vector<int>> classes;  // lambda_class of every gap
};

/// The realized image identifies the component of `target`: it holds at least
/// one outer gap and only gaps of that component. The images are inner
/// approximations, so they may miss some gaps of the component.
inline bool lands_in(const RealizedMoves& realized, const std::vector<int>& found, int target) {
  const auto& cls = realized.classes[target];
  if (found.empty()) return false;
  for (int h : found) {
    if (std::find(cls.begin(), cls.end(), h) == cls.end()) return false;
  }
  return true;
}

/// Moves computed by pushing approximate complementary components through
/// the realized maps.
inline RealizedMoves realized_gap_moves(const Realization& r, int depth = 3) {
  const auto cover = minimal_set_cover(r, depth).back();
  const int m = static_cast<int>(r.arcs().size());
  RealizedMoves out;
  for (int g = 0; g < m; ++g) out.classes.push_back(lambda_class(r, cover, g));
  for (int g = 0; g < m; ++g) {
    const CircleInterval c = lambda_gap(r, cover, g);
    const Letter s = r.config().word[g];
    const Letter t = r.config().word[(g + 1) % m];
    out.left.push_back(outer_gaps_inside(r, image(r.map(s.inverse()), c)));
    out.right.push_back(outer_gaps_inside(r, image(r.map(t.inverse()), c)));
  }
  return out;
}

/// Arc index whose closure equals the interval exactly, if any.
inline std::optional<int> arc_equal_to(const Realization& r, const CircleInterval& x) {
  for (int p = 0; p < static_cast<int>(r.arcs().size()); ++p) {
    if (r.arcs()[p] == x) return p;
  }
  return std::nullopt;
}

/// Arc index whose closure contains the interval, if any.
inline std::optional<int> arc_containing(const Realization& r, const CircleInterval& x) {
  for (int p = 0; p < static_cast<int>(r.arcs().size()); ++p) {
    if (closed_contains(r.arcs()[p], x)) return p;
  }
  return std::nullopt;
}

/// Image under s^{-1} of the gap of D(s) right-adjacent to arc p (a D(s) arc),
/// read back as an arc of the realization.
inline std::optional<int> realized_graph_successor(const Realization& r, int p) {
  const auto& word = r.config().word;
  const int m = static_cast<int>(word.size());
  const Letter s = word[p];
  int q = (p + 1) % m;
  while (word[q] != s) q = (q + 1) % m;
  const CircleInterval& from = r.arcs()[p];
  const CircleInterval gap = CircleInterval::between(from.start + from.length, r.arcs()[q].start);
  return arc_equal_to(r, image(r.map(s.inverse()), gap));
}

/// All valid configurations for the given per-generator counts, by brute
/// force: every arrangement, every offset tuple, canonicalized into a set.
inline std::set<Configuration> brute_force_configs(int rank, const std::vector<int>& k) {
  std::vector<Letter> letters;
  for (int a = 0; a < rank; ++a) {
    for (int i = 0; i < k[a]; ++i) {
      letters.emplace_back(a, false);
      letters.emplace_back(a, true);
    }
  }
  std::sort(letters.begin(), letters.end());
  std::set<Configuration> out;
  do {
    std::vector<int> offsets(rank, 0);
    while (true) {
      Configuration cfg{rank, letters, offsets};
      if (validate(cfg).empty()) out.insert(canonical_form(cfg));
      int a = rank - 1;
      while (a >= 0 && ++offsets[a] == k[a]) offsets[a--] = 0;
      if (a < 0) break;
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

}  // namespace pingpong::oracle
