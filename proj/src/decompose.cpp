#include "ladder/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace ladder {

namespace {

std::vector<int> cut_recursive(const Ladder& L, int ci, int t, Decomposition& D) {
  auto pcs = L.path_components();
  if (pcs.size() > 1) {
    std::vector<int> ids;
    for (const auto& pc : pcs) {
      auto sub = cut_recursive(pc, ci, t, D);
      ids.insert(ids.end(), sub.begin(), sub.end());
    }
    return ids;
  }

  auto pr = profile_classified(L, t);
  const CornerInfo* best = nullptr;
  for (const auto& info : pr.upper)
    if (info.splitting && (!best || info.corner.col > best->corner.col)) best = &info;

  if (!best) {
    auto reg = corner_regularity(L, t);
    if (!reg.regular) {
      std::ostringstream os;
      os << "piece without splitting corners is irregular at";
      for (auto p : reg.violators) os << " " << to_string(p);
      throw DecompositionInvariantFailure(os.str());
    }
    int id = static_cast<int>(D.pieces.size());
    D.pieces.push_back({id, L, ci, false});
    return {id};
  }

  Point corner = best->corner;
  auto b1 = border(L, Side::lower, 1);
  int r = 0, s = 0;
  for (int rr = corner.row - t + 2; rr <= corner.row; ++rr)
    for (int cc = corner.col - t + 2; cc <= corner.col; ++cc)
      if (L.contains(rr, cc) && b1.contains({rr, cc})) {
        r = std::max(r, rr);
        s = std::max(s, cc);
      }
  assert(r > 0 && s > 0);

  std::vector<Point> up, lo, overlap;
  for (auto p : L.points()) {
    bool in_up = p.row <= corner.row && p.col >= s;
    bool in_lo = p.row >= r && p.col <= corner.col;
    if (in_up) up.push_back(p);
    if (in_lo) lo.push_back(p);
    if (!in_up && !in_lo)
      throw DecompositionInvariantFailure("cut at " + to_string(corner) + " loses point " +
                                          to_string(p));
  }
  for (int rr = r; rr <= corner.row; ++rr)
    for (int cc = s; cc <= corner.col; ++cc) {
      if (!L.contains(rr, cc))
        throw DecompositionInvariantFailure("overlap rectangle leaves the ladder at " +
                                            to_string({rr, cc}));
      overlap.push_back({rr, cc});
    }

  Ladder upper_piece, lower_piece;
  try {
    upper_piece = Ladder::validate_anchored(std::move(up));
    lower_piece = Ladder::validate_anchored(std::move(lo));
  } catch (const ValidationError& e) {
    throw DecompositionInvariantFailure(std::string("cut side is not a ladder: ") + e.what());
  }

  auto ids_u = cut_recursive(upper_piece, ci, t, D);
  auto ids_l = cut_recursive(lower_piece, ci, t, D);

  CutRecord rec{ci, corner, {r, s}, overlap, {}};
  std::set<std::pair<int, int>> pairs;
  for (auto p : overlap)
    for (int u : ids_u)
      for (int l : ids_l)
        if (D.pieces[static_cast<std::size_t>(u)].ladder.contains(p) &&
            D.pieces[static_cast<std::size_t>(l)].ladder.contains(p))
          pairs.insert({u, l});
  rec.identified_pieces.assign(pairs.begin(), pairs.end());
  D.cuts.push_back(rec);

  ids_u.insert(ids_u.end(), ids_l.begin(), ids_l.end());
  return ids_u;
}

void verify_invariants(const Ladder& Y, int t, const Decomposition& D) {
  std::set<Point> covered;
  for (const auto& piece : D.pieces)
    covered.insert(piece.ladder.points().begin(), piece.ladder.points().end());
  if (std::vector<Point>(covered.begin(), covered.end()) != Y.points())
    throw DecompositionInvariantFailure("piece union differs from the ladder");

  for (const auto& s : minor_supports(Y, t)) {
    int owners = 0;
    for (const auto& piece : D.pieces) {
      bool inside = true;
      for (int r : s.rows)
        for (int c : s.cols)
          if (!piece.ladder.contains(r, c)) inside = false;
      owners += inside ? 1 : 0;
    }
    if (owners != 1) {
      std::ostringstream os;
      os << "support rows";
      for (int r : s.rows) os << " " << r;
      os << " cols";
      for (int c : s.cols) os << " " << c;
      os << " lies in " << owners << " pieces";
      throw DecompositionInvariantFailure(os.str());
    }
  }

  for (std::size_t ci = 0; ci < D.pieces_per_component.size(); ++ci)
    if (D.pieces_per_component[ci] != D.splits_per_component[ci] + 1)
      throw DecompositionInvariantFailure(
          "component " + std::to_string(ci) + " produced " +
          std::to_string(D.pieces_per_component[ci]) + " pieces, expected " +
          std::to_string(D.splits_per_component[ci] + 1));
}

}  // namespace

Decomposition decompose(const Ladder& Y, int t) {
  assert(t >= 2);
  Decomposition D;
  D.t = t;
  auto comps = t_components(Y, t);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    std::size_t before = D.pieces.size();
    if (comps[ci].free_point) {
      int id = static_cast<int>(D.pieces.size());
      D.pieces.push_back({id, comps[ci].ladder, static_cast<int>(ci), true});
      D.splits_per_component.push_back(0);
    } else {
      auto pr = profile_classified(comps[ci].ladder, t);
      D.splits_per_component.push_back(pr.split_count);
      cut_recursive(comps[ci].ladder, static_cast<int>(ci), t, D);
    }
    D.pieces_per_component.push_back(static_cast<int>(D.pieces.size() - before));
  }
  verify_invariants(Y, t, D);
  return D;
}

}  // namespace ladder
