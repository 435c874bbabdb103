#pragma once

#include <cstddef>
#include <set>
#include <tuple>

#include "ladder/poly.hpp"

namespace ladder {

template <class K>
struct Division {
  Polynomial<K> remainder;
  std::vector<Polynomial<K>> cofactors;  // aligned with the generator list
};

// Multivariate division: no remainder term is divisible by any generator's
// leading term, and f == sum(cofactor_i * gen_i) + remainder exactly (checked
// whenever cofactors are tracked).
template <class K>
Division<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& gens,
                        TermOrder ord, bool want_cofactors = true) {
  Division<K> out;
  if (want_cofactors) out.cofactors.assign(gens.size(), Polynomial<K>::zero());
  Polynomial<K> p = f;
  while (!p.is_zero_poly()) {
    const auto& lt = p.leading(ord);
    bool reduced = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_zero_poly()) continue;
      const auto& ltg = gens[i].leading(ord);
      if (!ltg.first.divides(lt.first)) continue;
      Monomial m = lt.first.divide(ltg.first);
      K c = lt.second / ltg.second;
      if (want_cofactors) out.cofactors[i] = out.cofactors[i] + Polynomial<K>::term(m, c);
      p = p - gens[i].times_term(m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.remainder = out.remainder + Polynomial<K>::term(lt.first, lt.second);
      p = p - Polynomial<K>::term(lt.first, lt.second);
    }
  }
  if (want_cofactors) {
    Polynomial<K> back = out.remainder;
    for (std::size_t i = 0; i < gens.size(); ++i) back = back + out.cofactors[i] * gens[i];
    if (!(back == f)) throw std::logic_error("division recombination identity failed");
  }
  return out;
}

struct BuchbergerCaps {
  std::size_t max_pairs = 50000;
  std::size_t max_basis = 400;
  int max_degree = 40;
};

template <class K>
struct GroebnerResult {
  std::vector<Polynomial<K>> basis;
  bool complete = false;
  std::size_t pairs_processed = 0;
};

template <class K>
Polynomial<K> monic(const Polynomial<K>& p, TermOrder ord) {
  if (p.is_zero_poly()) return p;
  return p.scaled(K(1) / p.leading(ord).second);
}

// Buchberger completion with the coprime-lcm and chain criteria. Pairs are
// handled in ascending lcm degree, so hitting the degree cap aborts cleanly
// with complete=false.
template <class K>
GroebnerResult<K> buchberger(const std::vector<Polynomial<K>>& gens, TermOrder ord,
                             BuchbergerCaps caps = {}) {
  GroebnerResult<K> res;
  auto& G = res.basis;
  for (const auto& g : gens)
    if (!g.is_zero_poly()) G.push_back(monic(g, ord));

  auto lt = [&](std::size_t i) -> const Monomial& { return G[i].leading(ord).first; };

  using PairKey = std::tuple<int, std::size_t, std::size_t>;  // (lcm degree, i, j)
  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      queue.insert({Monomial::lcm(lt(i), lt(j)).degree(), i, j});
  };
  for (std::size_t j = 1; j < G.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    if (res.pairs_processed >= caps.max_pairs) return res;
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    if (deg > caps.max_degree) return res;  // everything left is at least this degree
    ++res.pairs_processed;
    done.insert({i, j});

    Monomial u = Monomial::lcm(lt(i), lt(j));
    if (u == lt(i) * lt(j)) continue;  // coprime leading terms

    bool chained = false;
    for (std::size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!lt(k).divides(u)) continue;
      std::pair<std::size_t, std::size_t> key1 = std::minmax(i, k);
      std::pair<std::size_t, std::size_t> key2 = std::minmax(k, j);
      if (done.count(key1) && done.count(key2)) chained = true;
    }
    if (chained) continue;

    Polynomial<K> s =
        G[i].times_term(u.divide(lt(i)), K(1)) - G[j].times_term(u.divide(lt(j)), K(1));
    Polynomial<K> r = normal_form(s, G, ord, false).remainder;
    if (!r.is_zero_poly()) {
      G.push_back(monic(r, ord));
      if (G.size() > caps.max_basis) return res;
      push_pairs(G.size() - 1);
    }
  }
  res.complete = true;
  return res;
}

}  // namespace ladder
