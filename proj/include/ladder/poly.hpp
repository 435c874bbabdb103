#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ladder/point.hpp"

namespace ladder {

// Grid variable packed as tag | row | col. Smaller id = earlier row-major
// position = higher precedence in the diagonal orders, so the leading term of
// any minor is its main-diagonal product.
using VarId = std::uint32_t;

constexpr VarId make_var(int row, int col, int tag = 0) {
  return (static_cast<VarId>(tag) << 24) | (static_cast<VarId>(row) << 12) |
         static_cast<VarId>(col);
}
constexpr VarId make_var(Point p, int tag = 0) { return make_var(p.row, p.col, tag); }
constexpr int var_row(VarId v) { return static_cast<int>((v >> 12) & 0xfff); }
constexpr int var_col(VarId v) { return static_cast<int>(v & 0xfff); }
constexpr int var_tag(VarId v) { return static_cast<int>(v >> 24); }
constexpr Point var_point(VarId v) { return {var_row(v), var_col(v)}; }

inline std::string var_name(VarId v) {
  std::string s = "X(" + std::to_string(var_row(v)) + "," + std::to_string(var_col(v)) + ")";
  if (var_tag(v) != 0) s += "#" + std::to_string(var_tag(v));
  return s;
}

// Exponent vector, sparse, sorted by VarId.
struct Monomial {
  std::vector<std::pair<VarId, int>> exps;

  static Monomial one() { return {}; }
  static Monomial var(VarId v, int e = 1) {
    Monomial m;
    if (e > 0) m.exps.push_back({v, e});
    return m;
  }

  bool is_one() const { return exps.empty(); }
  int degree() const {
    int d = 0;
    for (auto& [v, e] : exps) d += e;
    return d;
  }
  int exponent(VarId v) const {
    for (auto& [w, e] : exps)
      if (w == v) return e;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.exps.size() || j < b.exps.size()) {
      if (j == b.exps.size() || (i < a.exps.size() && a.exps[i].first < b.exps[j].first))
        r.exps.push_back(a.exps[i++]);
      else if (i == a.exps.size() || b.exps[j].first < a.exps[i].first)
        r.exps.push_back(b.exps[j++]);
      else {
        r.exps.push_back({a.exps[i].first, a.exps[i].second + b.exps[j].second});
        ++i, ++j;
      }
    }
    return r;
  }

  bool divides(const Monomial& m) const {
    std::size_t j = 0;
    for (auto& [v, e] : exps) {
      while (j < m.exps.size() && m.exps[j].first < v) ++j;
      if (j == m.exps.size() || m.exps[j].first != v || m.exps[j].second < e) return false;
    }
    return true;
  }

  // Requires divisibility.
  Monomial divide(const Monomial& d) const {
    Monomial r;
    std::size_t j = 0;
    for (auto& [v, e] : exps) {
      int sub = 0;
      while (j < d.exps.size() && d.exps[j].first < v) ++j;
      if (j < d.exps.size() && d.exps[j].first == v) sub = d.exps[j].second;
      assert(sub <= e);
      if (e - sub > 0) r.exps.push_back({v, e - sub});
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.exps.size() || j < b.exps.size()) {
      if (j == b.exps.size() || (i < a.exps.size() && a.exps[i].first < b.exps[j].first))
        r.exps.push_back(a.exps[i++]);
      else if (i == a.exps.size() || b.exps[j].first < a.exps[i].first)
        r.exps.push_back(b.exps[j++]);
      else {
        r.exps.push_back({a.exps[i].first, std::max(a.exps[i].second, b.exps[j].second)});
        ++i, ++j;
      }
    }
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string str() const {
    if (exps.empty()) return "1";
    std::string s;
    for (auto& [v, e] : exps) {
      if (!s.empty()) s += "*";
      s += var_name(v);
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }
};

enum class TermOrder { diag_lex, diag_grlex };

// Returns <0, 0, >0 as a < b, a == b, a > b under the order.
inline int cmp(const Monomial& a, const Monomial& b, TermOrder o) {
  if (o == TermOrder::diag_grlex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
  }
  // Lexicographic with precedence by ascending VarId.
  std::size_t i = 0, j = 0;
  while (i < a.exps.size() || j < b.exps.size()) {
    VarId va = i < a.exps.size() ? a.exps[i].first : ~VarId{0};
    VarId vb = j < b.exps.size() ? b.exps[j].first : ~VarId{0};
    if (va == vb) {
      if (a.exps[i].second != b.exps[j].second)
        return a.exps[i].second < b.exps[j].second ? -1 : 1;
      ++i, ++j;
    } else if (va < vb) {
      return 1;  // a has positive exponent on the more significant variable
    } else {
      return -1;
    }
  }
  return 0;
}

struct MonomialDescLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp(a, b, TermOrder::diag_lex) > 0;
  }
};

// Sparse polynomial; terms sorted descending in diag_lex with no zero
// coefficients. Requires K to provide field operations, operator==, and the
// free functions is_zero / to_string.
template <class K>
struct Polynomial {
  using Term = std::pair<Monomial, K>;
  std::vector<Term> terms;

  static Polynomial zero() { return {}; }
  static Polynomial constant(K c) {
    Polynomial p;
    if (!is_zero(c)) p.terms.push_back({Monomial::one(), std::move(c)});
    return p;
  }
  static Polynomial var(VarId v, K c = K(1)) {
    Polynomial p;
    if (!is_zero(c)) p.terms.push_back({Monomial::var(v), std::move(c)});
    return p;
  }
  static Polynomial term(Monomial m, K c) {
    Polynomial p;
    if (!is_zero(c)) p.terms.push_back({std::move(m), std::move(c)});
    return p;
  }

  bool is_zero_poly() const { return terms.empty(); }
  int degree() const {
    int d = -1;
    for (auto& t : terms) d = std::max(d, t.first.degree());
    return d;
  }
  std::size_t term_count() const { return terms.size(); }

  K coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), m, [](const Term& t, const Monomial& mm) {
      return cmp(t.first, mm, TermOrder::diag_lex) > 0;
    });
    if (it != terms.end() && it->first == m) return it->second;
    return K();
  }

  const Term& leading(TermOrder o) const {
    assert(!terms.empty());
    if (o == TermOrder::diag_lex) return terms.front();
    const Term* best = &terms.front();
    for (auto& t : terms)
      if (cmp(t.first, best->first, o) > 0) best = &t;
    return *best;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
      int c;
      if (i == a.terms.size())
        c = -1;
      else if (j == b.terms.size())
        c = 1;
      else
        c = cmp(a.terms[i].first, b.terms[j].first, TermOrder::diag_lex);
      if (c > 0)
        r.terms.push_back(a.terms[i++]);
      else if (c < 0)
        r.terms.push_back(b.terms[j++]);
      else {
        K s = a.terms[i].second + b.terms[j].second;
        if (!is_zero(s)) r.terms.push_back({a.terms[i].first, std::move(s)});
        ++i, ++j;
      }
    }
    return r;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::map<Monomial, K, MonomialDescLex> acc;
    for (auto& ta : a.terms)
      for (auto& tb : b.terms) {
        Monomial m = ta.first * tb.first;
        auto [it, fresh] = acc.try_emplace(std::move(m), K());
        it->second += ta.second * tb.second;
      }
    Polynomial r;
    r.terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!is_zero(c)) r.terms.push_back({m, std::move(c)});
    return r;
  }

  Polynomial scaled(const K& c) const {
    if (is_zero(c)) return {};
    Polynomial r = *this;
    for (auto& t : r.terms) t.second = t.second * c;
    return r;
  }

  // this * (m, c) for a single term.
  Polynomial times_term(const Monomial& m, const K& c) const {
    if (is_zero(c)) return {};
    Polynomial r;
    r.terms.reserve(terms.size());
    for (auto& t : terms) r.terms.push_back({t.first * m, t.second * c});
    std::sort(r.terms.begin(), r.terms.end(), [](const Term& x, const Term& y) {
      return cmp(x.first, y.first, TermOrder::diag_lex) > 0;
    });
    return r;
  }

  int min_exponent(VarId v) const {
    int m = -1;
    for (auto& t : terms) {
      int e = t.first.exponent(v);
      if (m < 0 || e < m) m = e;
      if (m == 0) break;
    }
    return m < 0 ? 0 : m;
  }

  Polynomial divided_by_var_power(VarId v, int e) const {
    if (e == 0) return *this;
    Polynomial r = *this;
    Monomial d = Monomial::var(v, e);
    for (auto& t : r.terms) {
      assert(d.divides(t.first));
      t.first = t.first.divide(d);
    }
    std::sort(r.terms.begin(), r.terms.end(), [](const Term& x, const Term& y) {
      return cmp(x.first, y.first, TermOrder::diag_lex) > 0;
    });
    return r;
  }

  template <class F>
  K eval(F&& value_of) const {
    K acc = K();
    for (auto& t : terms) {
      K prod = t.second;
      for (auto& [v, e] : t.first.exps)
        for (int i = 0; i < e; ++i) prod = prod * value_of(v);
      acc = acc + prod;
    }
    return acc;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const {
    using ladder::to_string;
    if (terms.empty()) return "0";
    std::string s;
    for (auto& t : terms) {
      std::string c = to_string(t.second);
      if (!s.empty()) {
        if (!c.empty() && c[0] == '-') {
          s += " - ";
          c = c.substr(1);
        } else {
          s += " + ";
        }
      }
      if (t.first.is_one())
        s += c;
      else if (c == "1")
        s += t.first.str();
      else if (c == "-1" && s.empty())
        s += "-" + t.first.str();
      else
        s += c + "*" + t.first.str();
    }
    return s;
  }
};

// Single-divisor exact division; throws if the division leaves a remainder.
template <class K>
Polynomial<K> exact_div(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero_poly()) throw std::domain_error("polynomial division by zero");
  Polynomial<K> rem = a, q;
  const auto& ltb = b.terms.front();
  while (!rem.is_zero_poly()) {
    const auto& ltr = rem.terms.front();
    if (!ltb.first.divides(ltr.first))
      throw std::domain_error("inexact polynomial division");
    Monomial m = ltr.first.divide(ltb.first);
    K c = ltr.second / ltb.second;
    q = q + Polynomial<K>::term(m, c);
    rem = rem - b.times_term(m, c);
  }
  return q;
}

}  // namespace ladder
