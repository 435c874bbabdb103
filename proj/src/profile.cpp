#include "ladder/profile.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "ladder/supports.hpp"

namespace ladder {

bool BorderSet::contains(Point p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

BorderSet border(const Ladder& Y, Side side, int thickness) {
  assert(thickness >= 1);
  BorderSet b{side, thickness, {}};
  int d = side == Side::lower ? -thickness : thickness;
  for (auto p : Y.points())
    if (!Y.contains(p.row + d, p.col + d)) b.points.push_back(p);
  return b;
}

CornerProfile corner_profile(const Ladder& comp) {
  if (!comp.is_path_connected()) throw NotPathConnected();
  CornerProfile pr;
  for (auto p : comp.points()) {
    bool nw = comp.contains(p.row - 1, p.col - 1);
    bool n = comp.contains(p.row - 1, p.col);
    bool w = comp.contains(p.row, p.col - 1);
    bool se = comp.contains(p.row + 1, p.col + 1);
    bool s = comp.contains(p.row + 1, p.col);
    bool e = comp.contains(p.row, p.col + 1);
    if (!nw && n && w) pr.inside_lower.push_back(p);
    if (!se && s && e) pr.inside_upper.push_back(p);
  }
  std::sort(pr.inside_lower.begin(), pr.inside_lower.end());
  std::sort(pr.inside_upper.begin(), pr.inside_upper.end());
  pr.h = static_cast<int>(pr.inside_lower.size());
  pr.k = static_cast<int>(pr.inside_upper.size());

  pr.lower_chain.push_back({comp.row_min(), comp.col_max()});
  pr.lower_chain.insert(pr.lower_chain.end(), pr.inside_lower.begin(), pr.inside_lower.end());
  pr.lower_chain.push_back({comp.row_max(), comp.col_min()});
  pr.upper_chain.push_back({comp.row_min(), comp.col_max()});
  pr.upper_chain.insert(pr.upper_chain.end(), pr.inside_upper.begin(), pr.inside_upper.end());
  pr.upper_chain.push_back({comp.row_max(), comp.col_min()});

  auto check_chain = [](const std::vector<Point>& ch) {
    for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
      bool strict = i + 2 < ch.size() && i > 0;
      assert(strict ? ch[i].row < ch[i + 1].row : ch[i].row <= ch[i + 1].row);
      assert(strict ? ch[i].col > ch[i + 1].col : ch[i].col >= ch[i + 1].col);
      (void)strict;
    }
  };
  check_chain(pr.lower_chain);
  check_chain(pr.upper_chain);

  for (int i = 1; i <= pr.h + 1; ++i)
    pr.outside_lower.push_back({pr.a(i - 1).row, pr.a(i).col});
  for (int j = 1; j <= pr.k + 1; ++j)
    pr.outside_upper.push_back({pr.c(j).row, pr.c(j - 1).col});

#ifndef NDEBUG
  // Cross-check the chain-derived outside corners against the pointwise rule.
  {
    std::vector<Point> lo, up;
    for (auto p : comp.points()) {
      if (!comp.contains(p.row - 1, p.col) && !comp.contains(p.row, p.col - 1))
        lo.push_back(p);
      if (!comp.contains(p.row + 1, p.col) && !comp.contains(p.row, p.col + 1))
        up.push_back(p);
    }
    std::sort(lo.begin(), lo.end());
    std::sort(up.begin(), up.end());
    auto sl = pr.outside_lower, su = pr.outside_upper;
    std::sort(sl.begin(), sl.end());
    std::sort(su.begin(), su.end());
    assert(sl == lo);
    assert(su == up);
  }
#endif
  return pr;
}

namespace {

CornerInfo classify_one(const Ladder& comp, Point corner, int t, bool lower_corner,
                        const BorderSet& opposite) {
  CornerInfo info;
  info.corner = corner;
  int r0 = lower_corner ? corner.row : corner.row - t + 2;
  int c0 = lower_corner ? corner.col : corner.col - t + 2;
  info.block_inside = true;
  Point hit{};
  for (int r = r0; r < r0 + t - 1; ++r)
    for (int c = c0; c < c0 + t - 1; ++c) {
      Point p{r, c};
      if (!comp.contains(p)) info.block_inside = false;
      if (opposite.contains(p)) {
        ++info.border_hits;
        hit = p;
      }
    }
  // A lone hit inside a contained block sits at the block's far corner.
  if (info.block_inside && info.border_hits == 1) {
    Point far = lower_corner ? Point{corner.row + t - 2, corner.col + t - 2}
                             : Point{corner.row - t + 2, corner.col - t + 2};
    assert(hit == far);
    (void)far;
  }
  (void)hit;
  info.type1 = info.block_inside && info.border_hits <= 1;
  if (!lower_corner) info.splitting = info.border_hits >= 1;
  return info;
}

}  // namespace

void classify_corners(const Ladder& comp, int t, CornerProfile& pr) {
  assert(t >= 2);
  BorderSet b1 = border(comp, Side::lower, 1);
  BorderSet c1 = border(comp, Side::upper, 1);
  pr.t = t;
  pr.lower.clear();
  pr.upper.clear();
  pr.type1_lower = pr.type1_upper = pr.split_count = 0;
  for (auto p : pr.inside_lower) {
    auto info = classify_one(comp, p, t, true, c1);
    pr.type1_lower += info.type1 ? 1 : 0;
    pr.lower.push_back(info);
  }
  for (auto p : pr.inside_upper) {
    auto info = classify_one(comp, p, t, false, b1);
    pr.type1_upper += info.type1 ? 1 : 0;
    pr.split_count += info.splitting ? 1 : 0;
    pr.upper.push_back(info);
  }
  pr.classified = true;
}

CornerProfile profile_classified(const Ladder& comp, int t) {
  CornerProfile pr = corner_profile(comp);
  classify_corners(comp, t, pr);
  return pr;
}

RegularityResult corner_regularity(const Ladder& Y, int t) {
  RegularityResult res;
  for (const auto& comp : Y.path_components()) {
    auto pr = profile_classified(comp, t);
    for (const auto& info : pr.lower)
      if (!info.block_inside || info.border_hits > 0) {
        res.regular = false;
        res.violators.push_back(info.corner);
      }
  }
  return res;
}

Ladder strip_lower_border(const Ladder& Y, int t) {
  if (t <= 2) throw RequiresLargerT(t);
  BorderSet b1 = border(Y, Side::lower, 1);
  std::vector<Point> rest;
  for (auto p : Y.points())
    if (!b1.contains(p)) rest.push_back(p);
  if (rest.empty())
    throw InvalidResidualLadder({{GridViolation::Kind::empty, {}, {}, {}, 0}});
  Ladder Z;
  try {
    Z = Ladder::validate_anchored(std::move(rest));
  } catch (const ValidationError& e) {
    throw InvalidResidualLadder(e.violations());
  }

  // Self-check: for a regular t-connected input the chain shifts one step
  // along the diagonal except at its two ends.
  if (Y.is_path_connected() && corner_regularity(Y, t).regular && is_t_connected(Y, t)) {
    auto pr = corner_profile(Y);
    std::vector<Point> expect;
    expect.push_back({pr.a(0).row + 1, pr.a(0).col});
    for (int i = 1; i <= pr.h; ++i) expect.push_back({pr.a(i).row + 1, pr.a(i).col + 1});
    expect.push_back({pr.a(pr.h + 1).row, pr.a(pr.h + 1).col + 1});
    auto zpr = corner_profile(Z);
    if (zpr.lower_chain != expect) {
      std::ostringstream os;
      os << "stripped chain mismatch:";
      for (auto p : zpr.lower_chain) os << " " << to_string(p);
      os << " expected";
      for (auto p : expect) os << " " << to_string(p);
      throw DecompositionInvariantFailure(os.str());
    }
  }
  return Z;
}

}  // namespace ladder
