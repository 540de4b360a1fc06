#include "agmswarm/hilbert_class_poly.hpp"

#include <cmath>

#include <boost/multiprecision/mpfr.hpp>

#include "agmswarm/error.hpp"
#include "agmswarm/quadratic_forms.hpp"

namespace agmswarm::classes {
namespace {

using Real = boost::multiprecision::mpfr_float;

struct Complex {
  Real re, im;
};

Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
Complex operator-(const Complex& x, const Complex& y) { return {x.re - y.re, x.im - y.im}; }
Complex operator*(const Complex& x, const Complex& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
Complex operator*(const Complex& x, const Real& s) { return {x.re * s, x.im * s}; }
Complex operator/(const Complex& x, const Complex& y) {
  Real den = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / den, (x.im * y.re - x.re * y.im) / den};
}

Real real_pi() {
  Real out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

// j(tau) = E4^3 / Delta for tau = (-B + i sqrt|D|)/(2A), with the nome
// series truncated once terms fall below 10^-digits.
Complex j_value(const QuadForm& f, std::int64_t D, long digits) {
  const Real pi = real_pi();
  const Real modulus = exp(-pi * sqrt(Real(-D)) / f.a);
  const Real angle = -pi * f.b / f.a;
  const Complex nome{modulus * cos(angle), modulus * sin(angle)};
  const Real eps = pow(Real(10), -(digits + 5));

  Complex e4{Real(1), Real(0)};
  Complex qn = nome;
  Real qabs = modulus;
  for (std::int64_t n = 1;; ++n) {
    std::int64_t sigma3 = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) sigma3 += d * d * d;
    }
    e4 = e4 + qn * Real(240 * sigma3);
    if (qabs * 240 * sigma3 < eps && n > 2) break;
    qn = qn * nome;
    qabs *= modulus;
  }

  // prod (1 - q^n) by the pentagonal number theorem.
  Complex eta{Real(1), Real(0)};
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
    if (pow(modulus, e1) < eps) break;
    Complex t1{Real(1), Real(0)}, t2{Real(1), Real(0)};
    // Powers of the nome via exponent angles to avoid long products.
    t1 = Complex{pow(modulus, e1) * cos(angle * e1), pow(modulus, e1) * sin(angle * e1)};
    t2 = Complex{pow(modulus, e2) * cos(angle * e2), pow(modulus, e2) * sin(angle * e2)};
    const Real sign = (k % 2 == 0) ? Real(1) : Real(-1);
    eta = eta + (t1 + t2) * sign;
  }
  Complex eta24{Real(1), Real(0)};
  Complex base = eta;
  for (int e = 24; e; e >>= 1) {
    if (e & 1) eta24 = eta24 * base;
    base = base * base;
  }
  const Complex delta = nome * eta24;
  const Complex e4cubed = e4 * e4 * e4;
  return e4cubed / delta;
}

struct PrecisionScope {
  explicit PrecisionScope(unsigned digits) : saved(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionScope() { Real::default_precision(saved); }
  unsigned saved;
};

}  // namespace

std::string HilbertClassPoly::str() const {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const BigInt& c = coeffs[i];
    if (c == 0) continue;
    std::string mag = (c < 0 ? BigInt(-c) : c).str();
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (i == 0 || mag != "1") out += mag;
    if (i >= 1) out += mag != "1" ? "*x" : "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

HilbertClassPoly hilbert_class_poly(std::int64_t D, std::int64_t degree_guard) {
  const auto forms = reduced_forms(D);
  if (static_cast<std::int64_t>(forms.size()) > degree_guard) {
    throw Error(ErrorCode::GuardExceeded, "h(" + std::to_string(D) + ") = " + std::to_string(forms.size()) +
                                              " exceeds the degree guard");
  }
  double inv_a_sum = 0;
  for (const auto& f : forms) inv_a_sum += 1.0 / static_cast<double>(f.a);
  long digits = static_cast<long>(std::ceil(M_PI * std::sqrt(static_cast<double>(-D)) * inv_a_sum / std::log(10.0))) + 20;

  for (int attempt = 0; attempt < 5; ++attempt, digits *= 2) {
    PrecisionScope scope(static_cast<unsigned>(digits));
    std::vector<Complex> poly{{Real(1), Real(0)}};  // constant first
    for (const auto& f : forms) {
      const Complex j = j_value(f, D, digits);
      std::vector<Complex> next(poly.size() + 1, Complex{Real(0), Real(0)});
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] = next[i + 1] + poly[i];
        next[i] = next[i] - poly[i] * j;
      }
      poly = std::move(next);
    }
    HilbertClassPoly out;
    out.D = D;
    out.precision_digits = digits;
    bool clean = true;
    for (const Complex& c : poly) {
      Real rounded = round(c.re);
      if (abs(c.re - rounded) >= Real(0.25) || abs(c.im) >= Real(0.25)) {
        clean = false;
        break;
      }
      BigInt z;
      mpfr_get_z(z.backend().data(), rounded.backend().data(), MPFR_RNDN);
      out.coeffs.push_back(z);
    }
    if (clean) return out;
  }
  throw Error(ErrorCode::PrecisionExhausted, "coefficients of H_" + std::to_string(D) + " did not round cleanly");
}

std::vector<std::uint64_t> reduce_mod(const HilbertClassPoly& poly, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  out.reserve(poly.coeffs.size());
  const BigInt P(p);
  for (const BigInt& c : poly.coeffs) {
    BigInt r = c % P;
    if (r < 0) r += P;
    out.push_back(r.convert_to<std::uint64_t>());
  }
  return out;
}

FieldElement evaluate(const Field& F, const HilbertClassPoly& poly, FieldElement x) {
  const auto coeffs = reduce_mod(poly, F.p());
  FieldElement acc = F.zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = F.add(F.mul(acc, x), F.from_int(static_cast<std::int64_t>(coeffs[i])));
  }
  return acc;
}

const HilbertClassPoly& HcpCache::get(std::int64_t D) {
  auto it = polys_.find(D);
  if (it == polys_.end()) it = polys_.emplace(D, hilbert_class_poly(D, guard_)).first;
  return it->second;
}

}  // namespace agmswarm::classes
