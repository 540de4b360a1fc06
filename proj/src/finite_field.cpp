#include "agmswarm/finite_field.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "agmswarm/arith.hpp"
#include "agmswarm/error.hpp"

namespace agmswarm {
namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

// Dense polynomials over Z/p, constant term first, no trailing zeros.
using Poly = std::vector<std::int64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  trim(a);
  const std::int64_t lead_inv =
      static_cast<std::int64_t>(arith::pow_mod(static_cast<std::uint64_t>(m.back()), p - 2, p));
  while (a.size() >= m.size()) {
    std::int64_t factor = a.back() * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = arith::mod(a[shift + i] - factor * m[i], p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(prod), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> monic_poly, std::uint32_t p) {
  Poly f(monic_poly.begin(), monic_poly.end());
  trim(f);
  const std::size_t degree = f.size() - 1;
  if (degree == 0) return false;
  if (degree == 1) return true;
  // Distinct-degree filter: no factor of degree k <= r/2 divides f.
  Poly h = {0, 1};
  for (std::size_t k = 1; k <= degree / 2; ++k) {
    Poly acc = {1};
    Poly base = h;
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
      e >>= 1;
    }
    h = acc;
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = arith::mod(diff[1] - 1, p);
    trim(diff);
    if (diff.empty()) return false;
    Poly g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

FieldSpec make_field(std::uint64_t p, unsigned r) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (!arith::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (r < 1) throw Error(ErrorCode::BadDegree, "extension degree must be >= 1");
  std::uint64_t q = 0;
  if (!arith::checked_pow(p, r, q) || q > kMaxFieldOrder) {
    throw Error(ErrorCode::Overflow, "q = p^r exceeds the supported field size");
  }
  FieldSpec spec;
  spec.p = static_cast<std::uint32_t>(p);
  spec.r = r;
  spec.q = q;
  if (r == 1) {
    spec.modulus = {0, 1};
    return spec;
  }
  // Enumerate (c0, ..., c_{r-1}) lexicographically, c0 slowest.
  std::vector<std::uint32_t> coeffs(r, 0);
  for (;;) {
    std::vector<std::uint32_t> candidate = coeffs;
    candidate.push_back(1);
    if (candidate[0] != 0 && is_irreducible(candidate, spec.p)) {
      spec.modulus = std::move(candidate);
      return spec;
    }
    int pos = static_cast<int>(r) - 1;
    while (pos >= 0 && ++coeffs[pos] == p) coeffs[pos--] = 0;
    if (pos < 0) break;
  }
  throw Error(ErrorCode::BadDegree, "no irreducible polynomial found");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (spec_.modulus.size() != spec_.r + 1 || spec_.modulus.back() != 1) {
    throw Error(ErrorCode::BadDegree, "modulus must be monic of degree r");
  }
  if (spec_.r > 1 && !is_irreducible(spec_.modulus, spec_.p)) {
    throw Error(ErrorCode::BadDegree, "modulus is reducible");
  }
  place_.assign(spec_.r, 1);
  for (int i = static_cast<int>(spec_.r) - 2; i >= 0; --i) place_[i] = place_[i + 1] * spec_.p;
  one_ = FieldElement{place_[0]};
  order_factors_ = arith::factor(spec_.q - 1);
  generator_ = find_generator_slow();
  if (spec_.q <= kTableLimit) build_tables();
}

std::shared_ptr<const Field> Field::create(std::uint64_t p, unsigned r) {
  return std::make_shared<const Field>(make_field(p, r));
}

FieldElement Field::from_int(std::int64_t n) const {
  auto c0 = static_cast<std::uint32_t>(arith::mod(n, spec_.p));
  return FieldElement{c0 * place_[0]};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > spec_.r) throw Error(ErrorCode::ParseError, "too many coefficients");
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) idx += (coeffs[i] % spec_.p) * place_[i];
  return FieldElement{idx};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement x) const {
  std::vector<std::uint32_t> out(spec_.r);
  std::uint32_t idx = x.index();
  for (int i = static_cast<int>(spec_.r) - 1; i >= 0; --i) {
    out[i] = idx % spec_.p;
    idx /= spec_.p;
  }
  return out;
}

FieldElement Field::element(std::uint64_t index) const {
  if (index >= spec_.q) throw Error(ErrorCode::DomainError, "element index out of range");
  return FieldElement{static_cast<std::uint32_t>(index)};
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  const std::uint32_t p = spec_.p;
  if (spec_.r == 1) {
    std::uint32_t s = a.index() + b.index();
    return FieldElement{s >= p ? s - p : s};
  }
  std::uint32_t x = a.index(), y = b.index(), out = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.r; ++i) {
    std::uint32_t d = x % p + y % p;
    if (d >= p) d -= p;
    out += d * place;
    place *= p;
    x /= p;
    y /= p;
  }
  return FieldElement{out};
}

FieldElement Field::neg(FieldElement a) const {
  const std::uint32_t p = spec_.p;
  if (spec_.r == 1) return FieldElement{a.index() == 0 ? 0 : p - a.index()};
  std::uint32_t x = a.index(), out = 0, place = 1;
  for (std::uint32_t i = 0; i < spec_.r; ++i) {
    std::uint32_t d = x % p;
    out += (d == 0 ? 0 : p - d) * place;
    place *= p;
    x /= p;
  }
  return FieldElement{out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul_poly(FieldElement a, FieldElement b) const {
  const std::int64_t p = spec_.p;
  auto ca = coeffs(a);
  auto cb = coeffs(b);
  Poly pa(ca.begin(), ca.end()), pb(cb.begin(), cb.end());
  trim(pa);
  trim(pb);
  Poly m(spec_.modulus.begin(), spec_.modulus.end());
  Poly prod = poly_mulmod(pa, pb, m, p);
  std::vector<std::uint32_t> out(prod.begin(), prod.end());
  return from_coeffs(out);
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (spec_.r == 1) {
    return FieldElement{static_cast<std::uint32_t>(std::uint64_t{a.index()} * b.index() % spec_.p)};
  }
  if (a.is_zero() || b.is_zero()) return zero();
  if (has_tables()) {
    std::uint64_t k = std::uint64_t{log_[a.index()]} + log_[b.index()];
    if (k >= spec_.q - 1) k -= spec_.q - 1;
    return FieldElement{exp_[k]};
  }
  return mul_poly(a, b);
}

FieldElement Field::pow_slow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one_;
  FieldElement base = a;
  while (e) {
    if (e & 1) result = spec_.r == 1 ? mul(result, base) : mul_poly(result, base);
    base = spec_.r == 1 ? mul(base, base) : mul_poly(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  if (a.is_zero()) return e == 0 ? one_ : zero();
  if (has_tables()) {
    const std::uint64_t n = spec_.q - 1;
    auto k = static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a.index()]) * (e % n)) % n);
    return FieldElement{exp_[k]};
  }
  return pow_slow(a, e);
}

FieldElement Field::inv(FieldElement a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "inverse of zero");
  if (has_tables()) {
    std::uint32_t k = log_[a.index()];
    return FieldElement{exp_[k == 0 ? 0 : spec_.q - 1 - k]};
  }
  return pow(a, spec_.q - 2);
}

int Field::quad_char(FieldElement x) const {
  if (!phi_.empty()) return phi_[x.index()];
  if (x.is_zero()) return 0;
  return pow(x, (spec_.q - 1) / 2) == one_ ? 1 : -1;
}

FieldElement Field::sqrt_principal(FieldElement x) const {
  if (!is_3_mod_4()) throw Error(ErrorCode::FieldNot3Mod4, "q must be 3 mod 4");
  if (quad_char(x) == -1) throw Error(ErrorCode::NonSquareInput, render(x) + " is not a square");
  return pow(x, (spec_.q + 1) / 4);
}

std::uint64_t Field::mult_order(FieldElement x) const {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "order of zero");
  return arith::element_order(
      spec_.q - 1, order_factors_, [&](std::uint64_t e) { return pow(x, e); },
      [&](FieldElement y) { return y == one_; });
}

FieldElement Field::find_generator_slow() const {
  const std::uint64_t n = spec_.q - 1;
  for (std::uint64_t idx = 1; idx < spec_.q; ++idx) {
    FieldElement g{static_cast<std::uint32_t>(idx)};
    bool ok = true;
    for (auto [prime, exp] : order_factors_) {
      (void)exp;
      if (pow_slow(g, n / prime) == one_) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(ErrorCode::DomainError, "no generator found");
}

void Field::build_tables() {
  const std::uint64_t n = spec_.q - 1;
  exp_.resize(n);
  log_.assign(spec_.q, 0);
  phi_.assign(spec_.q, 0);
  FieldElement cur = one_;
  for (std::uint64_t k = 0; k < n; ++k) {
    exp_[k] = cur.index();
    log_[cur.index()] = static_cast<std::uint32_t>(k);
    phi_[cur.index()] = (k % 2 == 0) ? 1 : -1;
    cur = spec_.r == 1 ? mul(cur, generator_) : mul_poly(cur, generator_);
  }
}

std::uint64_t Field::dlog(FieldElement x) const {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "discrete log of zero");
  if (has_tables()) return log_[x.index()];
  // Baby-step giant-step would go here; desk-scale fields always have tables.
  throw Error(ErrorCode::GuardExceeded, "discrete log requires lookup tables");
}

std::string Field::render(FieldElement x) const {
  if (spec_.r == 1) return std::to_string(x.index());
  std::string out = "[";
  auto c = coeffs(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  out += ']';
  return out;
}

FieldElement Field::parse(std::string_view text) const {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = strip(s);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::ParseError, "bad integer '" + std::string(s) + "'");
    }
    return v;
  };
  text = strip(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw Error(ErrorCode::ParseError, "unterminated element list");
    text = text.substr(1, text.size() - 2);
    std::vector<std::uint32_t> c;
    while (!strip(text).empty()) {
      auto comma = text.find(',');
      auto piece = text.substr(0, comma);
      c.push_back(static_cast<std::uint32_t>(arith::mod(parse_int(piece), spec_.p)));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    if (c.size() != spec_.r) throw Error(ErrorCode::ParseError, "expected r coefficients");
    return from_coeffs(c);
  }
  return from_int(parse_int(text));
}

}  // namespace agmswarm
