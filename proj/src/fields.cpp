#include "ladder/fields.hpp"

namespace ladder {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  using u128 = unsigned __int128;
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>((u128)r * b % m);
    b = static_cast<std::uint64_t>((u128)b * b % m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      using u128 = unsigned __int128;
      x = static_cast<std::uint64_t>((u128)x * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Fp Fp::inverse() const {
  if (p == 0 || v == 0) throw std::domain_error("inverse of zero in prime field");
  return Fp(pow_mod(v, p - 2, p), p);
}

}  // namespace ladder
