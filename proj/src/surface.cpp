#include "pingpong/surface.hpp"

#include <algorithm>

#include "pingpong/union_find.hpp"

namespace pingpong {

GapMoveTable gap_moves(const Configuration& cfg) {
  const ArcIndex index(cfg);
  const int m = index.arc_count();
  GapMoveTable table;
  table.left_move.resize(m);
  table.right_move.resize(m);
  for (int g = 0; g < m; ++g) {
    // s^{-1} sends the right end of the left arc to the left end of its
    // graph successor; t^{-1} sends the left end of the right arc to the
    // right end of its graph predecessor.
    const ArcId succ = index.gamma_successor(ArcId{g});
    table.left_move[g] = GapId{index.wrap(succ.value - 1)};
    const ArcId pred = index.gamma_predecessor(ArcId{index.wrap(g + 1)});
    table.right_move[g] = GapId{pred.value};
  }
  return table;
}

std::vector<BoundaryCycle> boundary_components(const Configuration& cfg) {
  const GapMoveTable moves = gap_moves(cfg);
  const int m = static_cast<int>(moves.right_move.size());

  std::vector<BoundaryCycle> cycles;
  std::vector<int> cycle_of(m, -1);
  for (int start = 0; start < m; ++start) {
    if (cycle_of[start] >= 0) continue;
    BoundaryCycle cycle;
    int g = start;
    while (cycle_of[g] < 0) {
      cycle_of[g] = static_cast<int>(cycles.size());
      cycle.push_back(GapId{g});
      g = moves.right_move[g].value;
    }
    if (g != start) throw InternalError("right move is not a permutation of the gaps");
    cycles.push_back(std::move(cycle));
  }

  DisjointSets classes(m);
  for (int g = 0; g < m; ++g) {
    classes.unite(g, moves.left_move[g].value);
    classes.unite(g, moves.right_move[g].value);
  }
  // Both labelings number classes by first appearance, so equal partitions
  // give identical label vectors.
  if (classes.labels() != cycle_of) {
    throw InternalError("boundary cycles disagree with the gap equivalence classes");
  }
  return cycles;
}

int euler_characteristic(const Configuration& cfg) {
  require_valid(cfg);
  int total_k = 0;
  for (Letter s : cfg.word) {
    if (!s.inverted()) ++total_k;
  }
  return 1 + cfg.rank - 2 * total_k;
}

Verdict classify(const Configuration& cfg) {
  Verdict v;
  v.boundary_cycles = boundary_components(cfg);
  v.boundary_count = static_cast<int>(v.boundary_cycles.size());
  v.chi = euler_characteristic(cfg);
  const int twice_genus = 2 - v.chi - v.boundary_count;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw InternalError("glued surface has non-integral or negative genus");
  }
  v.genus = twice_genus / 2;
  v.isolated = v.boundary_count == 1;
  return v;
}

}  // namespace pingpong
