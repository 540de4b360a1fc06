#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace agmswarm::classes {

/// Exact rational with denominator 12.
struct HurwitzValue {
  std::int64_t twelfths = 0;

  bool is_integer() const { return twelfths % 12 == 0; }
  std::string str() const;

  HurwitzValue& operator+=(HurwitzValue o) {
    twelfths += o.twelfths;
    return *this;
  }
  friend HurwitzValue operator+(HurwitzValue l, HurwitzValue r) { return l += r; }
  auto operator<=>(const HurwitzValue&) const = default;
};

/// Hurwitz class number with the positive-argument convention: H(N) counts
/// discriminant -N, weighting classes at -3 by 1/3 and at -4 by 1/2.
/// H(0) = -1/12 and H(N) = 0 for N = 1, 2 mod 4.
HurwitzValue hurwitz_H(std::int64_t N);

/// The same quantity from the orders containing Z[(D + sqrt D)/2], D = -N:
/// sum over O' of 2 h(O') / |O'^x|, with each h(O') obtained from h(O_K)
/// through the conductor formula.
HurwitzValue hurwitz_H_order_sum(std::int64_t N);

/// t with |t| <= 2 sqrt(q), gcd(t, p) = 1, t = q + 1 mod 8, plus t = 0 when
/// q = 7 mod 8. Requires q = p^r = 3 mod 4 and p > 3.
struct TraceSpectrum {
  std::uint64_t q = 0;
  std::vector<std::int64_t> traces;  // ascending
};

TraceSpectrum admissible_traces(std::uint64_t q, std::uint64_t p);

/// t^2 - 4q = v^2 D_K and the candidate endomorphism discriminants.
struct OrderDecomposition {
  std::int64_t t = 0;
  std::uint64_t q = 0;
  std::int64_t disc_frobenius = 0;  // t^2 - 4q
  std::int64_t fundamental = 0;     // D_K
  std::int64_t conductor = 0;       // v
  /// u^2 D_K for u | v/2, ascending by |D|; {-q} when t = 0.
  std::vector<std::int64_t> candidates;
};

OrderDecomposition order_decomposition(std::int64_t t, std::uint64_t q);

/// Splits D = f^2 D_K with D_K fundamental.
void split_discriminant(std::int64_t D, std::int64_t& fundamental, std::int64_t& conductor);

}  // namespace agmswarm::classes
