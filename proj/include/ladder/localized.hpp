#pragma once

#include "ladder/poly.hpp"

namespace ladder {

// numerator / monomial denominator, normalized so no denominator variable
// divides every numerator term. The zero element is 0/1.
template <class K>
struct Localized {
  Polynomial<K> num;
  Monomial den;

  static Localized of(Polynomial<K> p) { return Localized{std::move(p), Monomial::one()}; }
  static Localized of_var(VarId v, K c) { return of(Polynomial<K>::var(v, std::move(c))); }

  bool is_zero() const { return num.is_zero_poly(); }

  Localized& normalize() {
    if (num.is_zero_poly()) {
      den = Monomial::one();
      return *this;
    }
    Monomial reduced;
    for (auto& [v, e] : den.exps) {
      int cancel = std::min(e, num.min_exponent(v));
      if (cancel > 0) num = num.divided_by_var_power(v, cancel);
      if (e - cancel > 0) reduced.exps.push_back({v, e - cancel});
    }
    den = std::move(reduced);
    return *this;
  }

  friend Localized operator+(const Localized& a, const Localized& b) {
    Monomial l = Monomial::lcm(a.den, b.den);
    Localized r{a.num.times_term(l.divide(a.den), K(1)) + b.num.times_term(l.divide(b.den), K(1)),
                l};
    return r.normalize();
  }
  Localized operator-() const { return {-num, den}; }
  friend Localized operator-(const Localized& a, const Localized& b) { return a + (-b); }
  friend Localized operator*(const Localized& a, const Localized& b) {
    Localized r{a.num * b.num, a.den * b.den};
    return r.normalize();
  }

  Localized over(const Monomial& extra) const {
    Localized r{num, den * extra};
    return r.normalize();
  }

  Localized pow(int e) const {
    Localized r = of(Polynomial<K>::constant(K(1)));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Localized&, const Localized&) = default;

  std::string str() const {
    if (den.is_one()) return num.str();
    return "(" + num.str() + ") / " + den.str();
  }
};

}  // namespace ladder
