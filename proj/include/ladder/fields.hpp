#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ladder {

// Exact arbitrary-precision rationals back every certificate.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return q == 0; }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline std::string to_string(const Rational& q) { return q.get_str(); }

bool is_probable_prime(std::uint64_t n);

// Prime field with the modulus carried in each value; a default-constructed
// zero is modulus-free and adopts the other operand's modulus. Used for fast
// randomized screening, never for certificates.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  static constexpr std::uint64_t kDefaultPrime = 2305843009213693951ull;  // 2^61 - 1

  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}
  static Fp of(long long value, std::uint64_t prime = kDefaultPrime) {
    long long m = value % static_cast<long long>(prime);
    if (m < 0) m += static_cast<long long>(prime);
    return Fp(static_cast<std::uint64_t>(m), prime);
  }

  bool is_zero() const { return v == 0; }

  friend std::uint64_t common_prime(const Fp& a, const Fp& b) {
    if (a.p == 0) return b.p;
    if (b.p == 0) return a.p;
    if (a.p != b.p) throw std::invalid_argument("mixed prime fields");
    return a.p;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = common_prime(a, b);
    if (p == 0) return Fp{};
    std::uint64_t s = a.v + b.v;
    if (s >= p) s -= p;
    return Fp(s, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t p = common_prime(a, b);
    if (p == 0) return Fp{};
    return Fp(a.v >= b.v ? a.v - b.v : a.v + p - b.v, p);
  }
  Fp operator-() const { return p == 0 ? Fp{} : Fp(v == 0 ? 0 : p - v, p); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = common_prime(a, b);
    if (p == 0) return Fp{};
    using u128 = unsigned __int128;
    return Fp(static_cast<std::uint64_t>((u128)a.v * b.v % p), p);
  }
  Fp inverse() const;
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.p != 0 && b.p != 0 && a.p != b.p) return false;
    return a.v == b.v;
  }
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }
inline std::string to_string(const Fp& x) { return std::to_string(x.v); }

}  // namespace ladder
