#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ladder/errors.hpp"
#include "ladder/point.hpp"

namespace ladder {

// A validated ladder: a finite grid set closed under completing the corners of
// any weakly NW/SE-comparable pair, with no empty row or column inside its
// bounding box. Rows and columns of a valid ladder are intervals, which is
// what the span table stores.
class Ladder {
 public:
  Ladder() = default;

  // Validates and shifts the bounding box to start at (1,1).
  static Ladder validate(std::vector<Point> pts);
  // Validates without relabelling coordinates.
  static Ladder validate_anchored(std::vector<Point> pts);
  // All violated constraints for an arbitrary point set; empty means valid.
  static std::vector<GridViolation> violations(const std::vector<Point>& pts);

  bool contains(int row, int col) const;
  bool contains(Point p) const { return contains(p.row, p.col); }

  int row_min() const { return row_min_; }
  int row_max() const { return row_max_; }
  int col_min() const { return col_min_; }
  int col_max() const { return col_max_; }
  int height() const { return row_max_ - row_min_ + 1; }
  int width() const { return col_max_ - col_min_ + 1; }

  // Column interval of a row inside the bounding box.
  int row_lo(int row) const { return spans_[static_cast<std::size_t>(row - row_min_)][0]; }
  int row_hi(int row) const { return spans_[static_cast<std::size_t>(row - row_min_)][1]; }

  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  bool is_path_connected() const;
  // Maximal edge-connected cell groups, each itself a ladder, ordered by
  // (row_min, col_min). Coordinates are kept.
  std::vector<Ladder> path_components() const;

  Ladder normalized() const;
  bool operator==(const Ladder& o) const { return points_ == o.points_; }

 private:
  static Ladder build_checked(std::vector<Point> pts, bool shift);

  std::vector<Point> points_;              // sorted row-major
  std::vector<std::array<int, 2>> spans_;  // per row: {lo, hi}
  int row_min_ = 1, row_max_ = 0, col_min_ = 1, col_max_ = 0;
};

}  // namespace ladder
