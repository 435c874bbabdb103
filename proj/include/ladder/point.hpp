#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ladder {

// A grid cell. Rows grow downward, columns grow to the right; both 1-based.
struct Point {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

// Componentwise (partial) order: a sits weakly north-west of b.
inline bool nw_of(Point a, Point b) { return a.row <= b.row && a.col <= b.col; }

inline std::string to_string(Point p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

}  // namespace ladder
