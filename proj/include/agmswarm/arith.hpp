#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Small integer helpers shared by the field and class-group code.
namespace agmswarm::arith {

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Integer power with overflow detection; returns false on overflow.
bool checked_pow(std::uint64_t base, unsigned exp, std::uint64_t& out);

/// floor(sqrt(n)) exactly.
std::uint64_t isqrt(std::uint64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Extended gcd: returns g >= 0 with x*a + y*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

/// Nonnegative remainder.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Kronecker symbol (d / n) for n >= 1.
int kronecker(std::int64_t d, std::int64_t n);

/// Multiplicative order of x modulo the group order given its factorization.
template <class Pow, class IsOne>
std::uint64_t element_order(std::uint64_t group_order,
                            const std::vector<std::pair<std::uint64_t, int>>& factors, Pow pow_fn,
                            IsOne is_one) {
  std::uint64_t ord = group_order;
  for (auto [prime, exp] : factors) {
    for (int i = 0; i < exp; ++i) {
      if (!is_one(pow_fn(ord / prime))) break;
      ord /= prime;
    }
  }
  return ord;
}

}  // namespace agmswarm::arith
