#include "agmswarm/hurwitz.hpp"

#include <algorithm>
#include <cstdlib>

#include "agmswarm/arith.hpp"
#include "agmswarm/error.hpp"
#include "agmswarm/quadratic_forms.hpp"

namespace agmswarm::classes {

std::string HurwitzValue::str() const {
  std::int64_t g = arith::gcd(twelfths, 12);
  if (g == 0) return "0";
  std::int64_t num = twelfths / g, den = 12 / g;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

// 12 * (2 / |O^x|) for an order of discriminant D.
std::int64_t unit_weight_twelfths(std::int64_t D) {
  if (D == -3) return 4;
  if (D == -4) return 6;
  return 12;
}

}  // namespace

HurwitzValue hurwitz_H(std::int64_t N) {
  if (N < 0) throw Error(ErrorCode::DomainError, "H(N) needs N >= 0");
  if (N == 0) return {-1};
  if (N % 4 == 1 || N % 4 == 2) return {0};
  HurwitzValue total;
  for (std::int64_t f = 1; f * f <= N; ++f) {
    if (N % (f * f) != 0) continue;
    const std::int64_t D = -(N / (f * f));
    if (!is_discriminant(D)) continue;
    total.twelfths += unit_weight_twelfths(D) * class_number(D);
  }
  return total;
}

void split_discriminant(std::int64_t D, std::int64_t& fundamental, std::int64_t& conductor) {
  if (!is_discriminant(D)) throw Error(ErrorCode::BadDiscriminant, std::to_string(D) + " is not a negative discriminant");
  // D = s^2 d with d squarefree.
  std::int64_t d = D, s = 1;
  for (std::int64_t f = 2; f * f <= std::llabs(d);) {
    if (d % (f * f) == 0) {
      d /= f * f;
      s *= f;
    } else {
      ++f;
    }
  }
  if (arith::mod(d, 4) == 1) {
    fundamental = d;
    conductor = s;
  } else {
    fundamental = 4 * d;
    conductor = s / 2;
  }
}

HurwitzValue hurwitz_H_order_sum(std::int64_t N) {
  if (N < 0) throw Error(ErrorCode::DomainError, "H(N) needs N >= 0");
  if (N == 0) return {-1};
  if (!is_discriminant(-N)) return {0};
  std::int64_t DK = 0, f = 0;
  split_discriminant(-N, DK, f);
  const std::int64_t hK = class_number(DK);
  // 2 h(O_u) / |O_u^x| = (2 h_K / |O_K^x|) * u * prod_{l | u} (1 - (D_K/l)/l).
  const std::int64_t base = unit_weight_twelfths(DK) * hK;
  HurwitzValue total;
  for (std::int64_t u = 1; u <= f; ++u) {
    if (f % u != 0) continue;
    std::int64_t factor = 1;
    for (auto [l, e] : arith::factor(static_cast<std::uint64_t>(u))) {
      auto ll = static_cast<std::int64_t>(l);
      std::int64_t pw = 1;
      for (int i = 1; i < e; ++i) pw *= ll;
      factor *= pw * (ll - arith::kronecker(DK, ll));
    }
    total.twelfths += base * factor;
  }
  return total;
}

TraceSpectrum admissible_traces(std::uint64_t q, std::uint64_t p) {
  if (q % 4 != 3) throw Error(ErrorCode::WrongCongruenceClass, "q must be 3 mod 4");
  if (p <= 3) throw Error(ErrorCode::SmallCharacteristic, "needs p > 3");
  TraceSpectrum out;
  out.q = q;
  const auto bound = static_cast<std::int64_t>(arith::isqrt(4 * q));
  const auto target = static_cast<std::int64_t>((q + 1) % 8);
  for (std::int64_t t = -bound; t <= bound; ++t) {
    if (t == 0) {
      if (q % 8 == 7) out.traces.push_back(0);
      continue;
    }
    if (arith::mod(t, 8) != target) continue;
    if (std::llabs(t) % static_cast<std::int64_t>(p) == 0) continue;
    out.traces.push_back(t);
  }
  return out;
}

OrderDecomposition order_decomposition(std::int64_t t, std::uint64_t q) {
  OrderDecomposition out;
  out.t = t;
  out.q = q;
  out.disc_frobenius = t * t - 4 * static_cast<std::int64_t>(q);
  if (out.disc_frobenius >= 0) throw Error(ErrorCode::DomainError, "trace outside the Hasse interval");
  split_discriminant(out.disc_frobenius, out.fundamental, out.conductor);
  if (t == 0) {
    out.candidates = {-static_cast<std::int64_t>(q)};
    return out;
  }
  if (out.conductor % 2 != 0) {
    throw Error(ErrorCode::DomainError, "trace " + std::to_string(t) + " has odd conductor; not a swarm trace");
  }
  const std::int64_t half = out.conductor / 2;
  for (std::int64_t u = 1; u <= half; ++u) {
    if (half % u == 0) out.candidates.push_back(u * u * out.fundamental);
  }
  std::sort(out.candidates.begin(), out.candidates.end(), std::greater<>());
  return out;
}

}  // namespace agmswarm::classes
