#include "agmswarm/agm_classical.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "agmswarm/error.hpp"

namespace agmswarm::classical {

Real pi() {
  Real out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

RealPair real_agm_step(const RealPair& pair) {
  if (pair.a <= 0 || pair.b <= 0) throw Error(ErrorCode::DomainError, "AGM needs positive inputs");
  return {(pair.a + pair.b) / 2, sqrt(pair.a * pair.b)};
}

AgmLimit real_agm_limit(const RealPair& pair, const Real& tol) {
  if (tol <= 0) throw Error(ErrorCode::DomainError, "tolerance must be positive");
  AgmLimit out;
  RealPair cur = pair;
  // Precision floor: quadratic convergence stalls at the working precision.
  const Real floor = std::numeric_limits<Real>::epsilon() * 16 * (abs(cur.a) + abs(cur.b));
  while (abs(cur.a - cur.b) >= tol && abs(cur.a - cur.b) > floor && out.iterations < 200) {
    cur = real_agm_step(cur);
    ++out.iterations;
    out.gaps.push_back(abs(cur.a - cur.b));
  }
  out.value = (cur.a + cur.b) / 2;
  return out;
}

PiApproxState pi_sequence(const RealPair& seed, int n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "need at least one term");
  PiApproxState st;
  RealPair cur = seed;
  Real partial = 0;
  Real weight = Real(1) / 2;  // 2^(i-2) at i = 1
  for (int i = 1; i <= n; ++i) {
    if (i > 1) cur = real_agm_step(cur);
    st.a.push_back(cur.a);
    st.b.push_back(cur.b);
    partial += weight * (cur.a * cur.a - cur.b * cur.b);
    weight *= 2;
    Real denom = 1 - partial;
    if (denom == 0) throw Error(ErrorCode::DomainError, "pi sequence denominator vanished");
    st.p.push_back(cur.a * cur.a / denom);
  }
  return st;
}

Real classical_2f1(Rational a, Rational b, Rational c, const Real& x, const Real& tol) {
  if (c.den != 0 && c.num % c.den == 0 && c.num / c.den <= 0) {
    throw Error(ErrorCode::DomainError, "c must not be a nonpositive integer");
  }
  if (abs(x) >= 1) throw Error(ErrorCode::DomainError, "series diverges for |x| >= 1");
  const Real av = a.value(), bv = b.value(), cv = c.value();
  Real term = 1, sum = 1;
  for (int n = 0; n < 100000; ++n) {
    term *= (av + n) * (bv + n) / ((cv + n) * (n + 1)) * x;
    sum += term;
    if (abs(term) < tol) break;
  }
  return sum;
}

Real elliptic_integral_I(const Real& a, const Real& b) {
  if (!(a > 0 && b > 0)) throw Error(ErrorCode::DomainError, "I(a, b) needs a, b > 0");
  Real m = real_agm_limit({a, b}, std::numeric_limits<Real>::epsilon() * 8).value;
  return pi() / (2 * m);
}

namespace {

// With x = 1/(1 - t^2) the period integral becomes
//   int_0^1 2 dt / (sqrt(1 - t^2) sqrt(1 - lambda + lambda t^2)).
Real period_integral(const Real& lambda) {
  boost::math::quadrature::tanh_sinh<Real> integrator(15, Real("1e-120"));
  auto f = [&](const Real& t, const Real& tc) -> Real {
    Real one_minus_t = tc > 0 ? tc : Real(1) - t;
    Real s = sqrt(one_minus_t * (1 + t));
    return 2 / (s * sqrt(1 - lambda + lambda * t * t));
  };
  return integrator.integrate(f, Real(0), Real(1));
}

}  // namespace

Real elliptic_integral_I_quadrature(const Real& a, const Real& b) {
  if (!(a > 0 && b > 0)) throw Error(ErrorCode::DomainError, "I(a, b) needs a, b > 0");
  return period_integral(1 - b * b / (a * a)) / (2 * a);
}

Real legendre_period_quadrature(const Real& lambda) {
  if (lambda < 0 || lambda >= 1) throw Error(ErrorCode::DomainError, "lambda must lie in [0, 1)");
  return period_integral(lambda);
}

Real legendre_period_hypergeometric(const Real& lambda) {
  return pi() * classical_2f1({1, 2}, {1, 2}, {1, 1}, lambda, Real("1e-55"));
}

}  // namespace agmswarm::classical
