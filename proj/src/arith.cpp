#include "agmswarm/arith.hpp"

#include <cstdlib>

namespace agmswarm::arith {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

bool checked_pow(std::uint64_t base, unsigned exp, std::uint64_t& out) {
  out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) return false;
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  for (int bit = 31; bit >= 0; --bit) {
    std::uint64_t cand = r | (std::uint64_t{1} << bit);
    if (cand * cand <= n) r = cand;
  }
  return r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

int kronecker(std::int64_t d, std::int64_t n) {
  // Jacobi-style reduction extended to even n.
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    std::int64_t dm8 = mod(d, 8);
    if (dm8 % 2 == 0) return 0;
    if (dm8 == 3 || dm8 == 5) result = -result;
  }
  if (n == 1) return result;
  std::int64_t a = mod(d, n);
  std::int64_t m = n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t mm8 = m % 8;
      if (mm8 == 3 || mm8 == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

}  // namespace agmswarm::arith
