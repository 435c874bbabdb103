#pragma once

#include <vector>

#include "ladder/profile.hpp"
#include "ladder/supports.hpp"

namespace ladder {

struct Piece {
  int id = 0;
  Ladder ladder;
  int component = 0;      // index of the originating t-component
  bool free_point = false;
};

// One cut: the splitting upper corner, the deepest lower-border cell of its
// block, the duplicated rectangle, and the final pieces that received copies.
struct CutRecord {
  int component = 0;
  Point corner{};    // splitting inside upper corner (c,d)
  Point band{};      // (r,s): max lower-border row/column inside the block
  std::vector<Point> overlap;
  std::vector<std::pair<int, int>> identified_pieces;  // (upper-side id, lower-side id)
};

struct Decomposition {
  int t = 2;
  std::vector<Piece> pieces;
  std::vector<CutRecord> cuts;
  std::vector<int> pieces_per_component;
  std::vector<int> splits_per_component;  // splitting-corner count of each t-component
};

// Splits into t-components, then repeatedly cuts each component at the
// splitting upper corner with the largest column until none remain. Overlap
// rectangles are duplicated into both sides. All structural invariants are
// re-verified; any failure throws DecompositionInvariantFailure.
Decomposition decompose(const Ladder& Y, int t);

}  // namespace ladder
