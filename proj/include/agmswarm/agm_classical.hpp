#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

// The real arithmetic-geometric mean and its classical companions:
// Gauss's pi sequence, the 2F1 series, and the elliptic integral I(a, b).
namespace agmswarm::classical {

/// 60 significant decimal digits.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<60>,
                                           boost::multiprecision::et_off>;

Real pi();

struct RealPair {
  Real a;
  Real b;
};

struct Rational {
  std::int64_t num;
  std::int64_t den;
  Real value() const { return Real(num) / den; }
};

/// (a, b) -> ((a + b) / 2, sqrt(ab)).
RealPair real_agm_step(const RealPair& pair);

struct AgmLimit {
  Real value;
  int iterations = 0;
  /// |a_n - b_n| after each step, for convergence diagnostics.
  std::vector<Real> gaps;
};

/// Iterate until |a_n - b_n| < tol.
AgmLimit real_agm_limit(const RealPair& pair, const Real& tol);

/// a_i, b_i history and p_i = a_i^2 / (1 - sum_{k<=i} 2^(k-2) (a_k^2 - b_k^2)),
/// with (a_1, b_1) the seed.
struct PiApproxState {
  std::vector<Real> a;
  std::vector<Real> b;
  std::vector<Real> p;
};

PiApproxState pi_sequence(const RealPair& seed, int n);
inline PiApproxState pi_sequence(int n) { return pi_sequence({boost::multiprecision::sqrt(Real(2)), Real(1)}, n); }

/// Partial sums of the Gauss series 2F1(a, b; c; x) until a term drops below tol.
Real classical_2f1(Rational a, Rational b, Rational c, const Real& x, const Real& tol);

/// I(a, b) = pi / (2 AGM(a, b)).
Real elliptic_integral_I(const Real& a, const Real& b);

/// I(a, b) by direct tanh-sinh quadrature of the defining integral over [1, inf).
Real elliptic_integral_I_quadrature(const Real& a, const Real& b);

/// Real period of y^2 = x(x-1)(x-lambda), 0 <= lambda < 1, by quadrature.
Real legendre_period_quadrature(const Real& lambda);

/// pi * 2F1(1/2, 1/2; 1; lambda).
Real legendre_period_hypergeometric(const Real& lambda);

}  // namespace agmswarm::classical
