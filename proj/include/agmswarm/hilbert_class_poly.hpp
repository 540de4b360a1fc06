#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "agmswarm/finite_field.hpp"

namespace agmswarm::classes {

inline constexpr std::int64_t kDefaultHcpDegreeGuard = 30;

using BigInt = boost::multiprecision::mpz_int;

struct HilbertClassPoly {
  std::int64_t D = 0;
  /// Monic, constant term first; degree h(D).
  std::vector<BigInt> coeffs;
  /// Decimal digits used by the successful evaluation.
  long precision_digits = 0;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  std::string str() const;
};

/// prod over reduced forms (A, B, C) of (x - j((-B + sqrt D)/(2A))), evaluated
/// in multiprecision complex arithmetic and rounded to integers. Precision
/// starts from the size of the j-values and doubles whenever a coefficient
/// fails to round cleanly (residual >= 1/4).
HilbertClassPoly hilbert_class_poly(std::int64_t D, std::int64_t degree_guard = kDefaultHcpDegreeGuard);

/// Coefficients reduced into [0, p).
std::vector<std::uint64_t> reduce_mod(const HilbertClassPoly& poly, std::uint64_t p);

/// Evaluates the polynomial (coefficients mapped into F_p subset F_q) at x.
FieldElement evaluate(const Field& F, const HilbertClassPoly& poly, FieldElement x);

/// Memoizes polynomials by discriminant.
class HcpCache {
 public:
  explicit HcpCache(std::int64_t degree_guard = kDefaultHcpDegreeGuard) : guard_(degree_guard) {}
  const HilbertClassPoly& get(std::int64_t D);
  std::int64_t degree_guard() const { return guard_; }

 private:
  std::int64_t guard_;
  std::map<std::int64_t, HilbertClassPoly> polys_;
};

}  // namespace agmswarm::classes
