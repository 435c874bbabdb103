#include "ladder/ladder.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace ladder {

std::string GridViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::empty:
      os << "empty point set";
      break;
    case Kind::closure:
      os << "closure violation: " << to_string(a) << " and " << to_string(b)
         << " require " << to_string(missing);
      break;
    case Kind::empty_row:
      os << "empty row " << index;
      break;
    case Kind::empty_col:
      os << "empty column " << index;
      break;
  }
  return os.str();
}

namespace {

std::string join_violations(const std::vector<GridViolation>& v) {
  std::ostringstream os;
  os << v.size() << " constraint(s) violated:";
  for (const auto& x : v) os << "\n  - " << x.describe();
  return os.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<GridViolation> v)
    : std::runtime_error("invalid ladder: " + join_violations(v)), violations_(std::move(v)) {}

InvalidResidualLadder::InvalidResidualLadder(std::vector<GridViolation> v)
    : std::runtime_error("stripped ladder is invalid: " + join_violations(v)),
      violations_(std::move(v)) {}

ComponentNotLadder::ComponentNotLadder(std::vector<GridViolation> v)
    : std::runtime_error("component is not a ladder: " + join_violations(v)),
      violations_(std::move(v)) {}

IrregularCorners::IrregularCorners(std::vector<Point> violators)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "inside lower corner block leaves the ladder or meets the upper border at:";
        for (auto p : violators) os << " " << to_string(p);
        return os.str();
      }()),
      violators_(std::move(violators)) {}

std::vector<GridViolation> Ladder::violations(const std::vector<Point>& pts) {
  std::vector<GridViolation> out;
  if (pts.empty()) {
    out.push_back({GridViolation::Kind::empty, {}, {}, {}, 0});
    return out;
  }
  std::set<Point> set(pts.begin(), pts.end());
  constexpr std::size_t kMaxRecorded = 256;

  std::set<Point> reported_missing;
  for (auto it = set.begin(); it != set.end() && out.size() < kMaxRecorded; ++it) {
    for (auto jt = std::next(it); jt != set.end() && out.size() < kMaxRecorded; ++jt) {
      Point p = *it, q = *jt;
      if (!(p.row <= q.row && p.col <= q.col) && !(q.row <= p.row && q.col <= p.col)) continue;
      if (p == q) continue;
      for (Point m : {Point{p.row, q.col}, Point{q.row, p.col}}) {
        if (!set.count(m) && reported_missing.insert(m).second)
          out.push_back({GridViolation::Kind::closure, p, q, m, 0});
      }
    }
  }

  int rmin = pts[0].row, rmax = pts[0].row, cmin = pts[0].col, cmax = pts[0].col;
  for (auto p : pts) {
    rmin = std::min(rmin, p.row);
    rmax = std::max(rmax, p.row);
    cmin = std::min(cmin, p.col);
    cmax = std::max(cmax, p.col);
  }
  std::vector<bool> row_seen(static_cast<std::size_t>(rmax - rmin + 1), false);
  std::vector<bool> col_seen(static_cast<std::size_t>(cmax - cmin + 1), false);
  for (auto p : pts) {
    row_seen[static_cast<std::size_t>(p.row - rmin)] = true;
    col_seen[static_cast<std::size_t>(p.col - cmin)] = true;
  }
  for (int r = rmin; r <= rmax; ++r)
    if (!row_seen[static_cast<std::size_t>(r - rmin)])
      out.push_back({GridViolation::Kind::empty_row, {}, {}, {}, r});
  for (int c = cmin; c <= cmax; ++c)
    if (!col_seen[static_cast<std::size_t>(c - cmin)])
      out.push_back({GridViolation::Kind::empty_col, {}, {}, {}, c});
  return out;
}

Ladder Ladder::build_checked(std::vector<Point> pts, bool shift) {
  auto v = violations(pts);
  if (!v.empty()) throw ValidationError(std::move(v));

  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Ladder L;
  L.row_min_ = pts.front().row;
  L.row_max_ = pts.back().row;
  L.col_min_ = pts[0].col;
  L.col_max_ = pts[0].col;
  for (auto p : pts) {
    L.col_min_ = std::min(L.col_min_, p.col);
    L.col_max_ = std::max(L.col_max_, p.col);
  }
  if (shift) {
    int dr = 1 - L.row_min_, dc = 1 - L.col_min_;
    for (auto& p : pts) {
      p.row += dr;
      p.col += dc;
    }
    L.row_min_ += dr;
    L.row_max_ += dr;
    L.col_min_ += dc;
    L.col_max_ += dc;
  }
  L.points_ = std::move(pts);

  L.spans_.assign(static_cast<std::size_t>(L.height()), {0, 0});
  std::size_t i = 0;
  for (int r = L.row_min_; r <= L.row_max_; ++r) {
    int lo = L.points_[i].col, hi = lo;
    std::size_t start = i;
    while (i < L.points_.size() && L.points_[i].row == r) {
      hi = L.points_[i].col;
      ++i;
    }
    // Valid ladders have interval rows; a gap would leave an empty column
    // between the runs or break closure, both caught above.
    if (static_cast<int>(i - start) != hi - lo + 1)
      throw ValidationError({{GridViolation::Kind::closure, L.points_[start],
                              L.points_[i - 1], Point{r, lo + 1}, 0}});
    L.spans_[static_cast<std::size_t>(r - L.row_min_)] = {lo, hi};
  }

  // Forced members of every valid set.
  if (!L.contains(L.row_min_, L.col_max_) || !L.contains(L.row_max_, L.col_min_))
    throw ValidationError({{GridViolation::Kind::closure,
                            Point{L.row_min_, L.col_max_},
                            Point{L.row_max_, L.col_min_},
                            Point{L.row_min_, L.col_max_}, 0}});
  return L;
}

Ladder Ladder::validate(std::vector<Point> pts) { return build_checked(std::move(pts), true); }

Ladder Ladder::validate_anchored(std::vector<Point> pts) {
  return build_checked(std::move(pts), false);
}

bool Ladder::contains(int row, int col) const {
  if (row < row_min_ || row > row_max_) return false;
  const auto& s = spans_[static_cast<std::size_t>(row - row_min_)];
  return col >= s[0] && col <= s[1];
}

bool Ladder::is_path_connected() const { return path_components().size() == 1; }

std::vector<Ladder> Ladder::path_components() const {
  std::vector<Ladder> out;
  if (points_.empty()) return out;
  // Rows of one component are consecutive and their spans overlap; scan rows
  // and split whenever the next span does not touch the current one.
  std::vector<std::vector<Point>> groups;
  std::vector<Point> cur;
  for (int r = row_min_; r <= row_max_; ++r) {
    const auto& s = spans_[static_cast<std::size_t>(r - row_min_)];
    bool joined = false;
    if (!cur.empty()) {
      const auto& prev = spans_[static_cast<std::size_t>(r - 1 - row_min_)];
      joined = std::max(prev[0], s[0]) <= std::min(prev[1], s[1]);
    }
    if (!joined && !cur.empty()) {
      groups.push_back(std::move(cur));
      cur.clear();
    }
    for (int c = s[0]; c <= s[1]; ++c) cur.push_back({r, c});
  }
  if (!cur.empty()) groups.push_back(std::move(cur));
  for (auto& g : groups) out.push_back(Ladder::validate_anchored(std::move(g)));
  std::sort(out.begin(), out.end(), [](const Ladder& a, const Ladder& b) {
    return std::pair{a.row_min(), a.col_min()} < std::pair{b.row_min(), b.col_min()};
  });
  return out;
}

Ladder Ladder::normalized() const {
  auto pts = points_;
  return validate(std::move(pts));
}

}  // namespace ladder
