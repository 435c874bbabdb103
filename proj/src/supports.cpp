#include "ladder/supports.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>

namespace ladder {

namespace {

// Comparable cells of a ladder span full rectangles; per path component this
// is equivalent to consecutive row spans moving weakly left while overlapping.
void assert_rectangle_fullness(const Ladder& comp) {
#ifndef NDEBUG
  for (int r = comp.row_min(); r < comp.row_max(); ++r) {
    assert(comp.row_lo(r + 1) <= comp.row_lo(r));
    assert(comp.row_hi(r + 1) <= comp.row_hi(r));
    assert(comp.row_lo(r) <= comp.row_hi(r + 1));
  }
#else
  (void)comp;
#endif
}

void combinations(int lo, int hi, int size, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == size) {
    emit(cur);
    return;
  }
  int need = size - static_cast<int>(cur.size());
  for (int v = lo; v <= hi - need + 1; ++v) {
    cur.push_back(v);
    combinations(v + 1, hi, size, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MinorSupport> minor_supports(const Ladder& Y, int t,
                                         std::optional<std::size_t> cap) {
  assert(t >= 2);
  std::vector<MinorSupport> out;
  for (const auto& comp : Y.path_components()) {
    assert_rectangle_fullness(comp);
    if (comp.height() < t || comp.width() < t) continue;
    std::vector<int> rows;
    combinations(comp.row_min(), comp.row_max(), t, rows, [&](const std::vector<int>& rs) {
      // Columns common to all chosen rows form an interval.
      int lo = comp.row_lo(rs.front());
      int hi = comp.row_hi(rs.back());
      for (int r : rs) {
        lo = std::max(lo, comp.row_lo(r));
        hi = std::min(hi, comp.row_hi(r));
      }
      if (hi - lo + 1 < t) return;
      std::vector<int> cols;
      combinations(lo, hi, t, cols, [&](const std::vector<int>& cs) {
        if (cap && out.size() >= *cap) throw CapExceeded(out.size(), "minor support cap exceeded");
        out.push_back({rs, cs});
      });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MinorSupport> minor_supports_reference(const Ladder& Y, int t,
                                                   std::optional<std::size_t> cap) {
  assert(t >= 2);
  std::vector<MinorSupport> out;
  std::vector<int> rows;
  combinations(Y.row_min(), Y.row_max(), t, rows, [&](const std::vector<int>& rs) {
    std::vector<int> cols;
    combinations(Y.col_min(), Y.col_max(), t, cols, [&](const std::vector<int>& cs) {
      for (int r : rs)
        for (int c : cs)
          if (!Y.contains(r, c)) return;
      if (cap && out.size() >= *cap) throw CapExceeded(out.size(), "minor support cap exceeded");
      out.push_back({rs, cs});
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Component> t_components(const Ladder& Y, int t) {
  const auto& pts = Y.points();
  std::map<Point, std::size_t> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = i;

  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  std::vector<bool> covered(pts.size(), false);
  for (const auto& s : minor_supports(Y, t)) {
    std::size_t anchor = index.at({s.rows[0], s.cols[0]});
    for (int r : s.rows)
      for (int c : s.cols) {
        std::size_t i = index.at({r, c});
        covered[i] = true;
        unite(i, anchor);
      }
  }

  std::map<std::size_t, std::vector<Point>> classes;
  std::vector<Point> free_points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (covered[i])
      classes[find(i)].push_back(pts[i]);
    else
      free_points.push_back(pts[i]);
  }

  std::vector<Component> out;
  for (auto& [root, members] : classes) {
    try {
      out.push_back({Ladder::validate_anchored(std::move(members)), false});
    } catch (const ValidationError& e) {
      throw ComponentNotLadder(e.violations());
    }
  }
  for (auto p : free_points) out.push_back({Ladder::validate_anchored({p}), true});
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return std::pair{a.ladder.row_min(), a.ladder.col_min()} <
           std::pair{b.ladder.row_min(), b.ladder.col_min()};
  });
  return out;
}

bool is_t_connected(const Ladder& Y, int t) {
  auto comps = t_components(Y, t);
  return comps.size() == 1 && !comps.front().free_point;
}

}  // namespace ladder
