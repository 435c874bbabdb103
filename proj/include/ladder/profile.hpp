#pragma once

#include <vector>

#include "ladder/ladder.hpp"

namespace ladder {

enum class Side { lower, upper };

// Points whose diagonal translate by (-s,-s) (lower) or (+s,+s) (upper)
// leaves the ladder.
struct BorderSet {
  Side side = Side::lower;
  int thickness = 1;
  std::vector<Point> points;
  bool contains(Point p) const;
};

BorderSet border(const Ladder& Y, Side side, int thickness);

// Classification of one inside corner relative to the opposite border.
struct CornerInfo {
  Point corner{};
  bool block_inside = false;  // rooted (t-1)x(t-1) block lies in the ladder
  int border_hits = 0;        // |block ∩ opposite thickness-1 border|
  bool type1 = false;         // block inside and at most one border hit
  bool splitting = false;     // upper corners only: block meets the lower border
};

// Corner staircase data of one path-connected ladder.
//
// lower_chain = (a_0,b_0),...,(a_{h+1},b_{h+1}) runs from (row_min, col_max)
// to (row_max, col_min) through the inside lower corners; upper_chain is the
// mirror image through the inside upper corners. Outside corners are read off
// the chains: S_i = (a_{i-1}, b_i), T_j = (c_j, d_{j-1}).
struct CornerProfile {
  std::vector<Point> lower_chain, upper_chain;
  int h = 0, k = 0;
  std::vector<Point> outside_lower, outside_upper;  // S_1..S_{h+1}, T_1..T_{k+1}
  std::vector<Point> inside_lower, inside_upper;    // S'_1..S'_h, T'_1..T'_k

  // Filled by classify_corners.
  bool classified = false;
  int t = 0;
  std::vector<CornerInfo> lower, upper;  // parallel to inside_lower/inside_upper
  int type1_lower = 0;                   // corners S'_i of type 1
  int type1_upper = 0;                   // corners T'_j of type 1
  int split_count = 0;                   // upper corners whose block meets the lower border

  Point a(int i) const { return lower_chain[static_cast<std::size_t>(i)]; }
  Point c(int j) const { return upper_chain[static_cast<std::size_t>(j)]; }
};

CornerProfile corner_profile(const Ladder& component);
void classify_corners(const Ladder& component, int t, CornerProfile& profile);
CornerProfile profile_classified(const Ladder& component, int t);

// Whether every inside lower corner's rooted block stays inside the ladder and
// misses the thickness-1 upper border entirely. Evaluated per path component.
struct RegularityResult {
  bool regular = true;
  std::vector<Point> violators;
};
RegularityResult corner_regularity(const Ladder& Y, int t);

// Removes the thickness-1 lower border and re-validates, keeping coordinates.
// For a regular t-connected input the resulting corner chain is checked
// against the shifted chain of the input.
Ladder strip_lower_border(const Ladder& Y, int t);

}  // namespace ladder
