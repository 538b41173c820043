#pragma once

#include <vector>

#include "pingpong/config.hpp"

namespace pingpong {

/// How the outer gaps move under the generators that pull them out of their
/// bounding arcs. For gap g between arc g (letter s) and arc g+1 (letter t):
/// left_move[g] is the gap reached by s^{-1}, right_move[g] the gap reached
/// by t^{-1}.
struct GapMoveTable {
  std::vector<GapId> left_move;
  std::vector<GapId> right_move;
};

GapMoveTable gap_moves(const Configuration& cfg);

using BoundaryCycle = std::vector<GapId>;

/// Cycles of g -> right_move[g], each starting at its smallest gap, ordered
/// by that gap. Cross-checked against a union-find over both moves; throws
/// InternalError if the partitions differ.
std::vector<BoundaryCycle> boundary_components(const Configuration& cfg);

/// Euler characteristic of the glued surface: 1 + n - 2 * sum_a k(a).
int euler_characteristic(const Configuration& cfg);

/// Topology of the glued surface. `isolated` means the configuration meets
/// the single-boundary-component criterion for an isolated circular order.
struct Verdict {
  int boundary_count = 0;
  int chi = 0;
  int genus = 0;
  bool isolated = false;
  std::vector<BoundaryCycle> boundary_cycles;
};

Verdict classify(const Configuration& cfg);

}  // namespace pingpong
