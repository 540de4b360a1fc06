#include "agmswarm/quadratic_forms.hpp"

#include <algorithm>
#include <cstdlib>

#include "agmswarm/arith.hpp"
#include "agmswarm/error.hpp"

namespace agmswarm::classes {

bool QuadForm::is_reduced() const {
  if (a <= 0) return false;
  if (std::llabs(b) > a || a > c) return false;
  if ((std::llabs(b) == a || a == c) && b < 0) return false;
  return true;
}

bool QuadForm::is_primitive() const { return arith::gcd(arith::gcd(a, b), c) == 1; }

std::string QuadForm::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

bool is_discriminant(std::int64_t D) {
  if (D >= 0) return false;
  std::int64_t r = arith::mod(D, 4);
  return r == 0 || r == 1;
}

bool is_fundamental(std::int64_t D) {
  if (!is_discriminant(D)) return false;
  std::int64_t m = D;
  if (arith::mod(D, 4) == 0) {
    m = D / 4;
    std::int64_t r = arith::mod(m, 4);
    if (r != 2 && r != 3) return false;
  }
  std::int64_t n = std::llabs(m);
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % (f * f) == 0) return false;
  }
  return true;
}

QuadForm reduce(QuadForm f) {
  if (f.a <= 0 || f.discriminant() >= 0) {
    throw Error(ErrorCode::BadDiscriminant, "reduce needs a positive definite form, got " + f.str());
  }
  const std::int64_t D = f.discriminant();
  for (;;) {
    // Normalize b into (-a, a].
    if (f.b <= -f.a || f.b > f.a) {
      std::int64_t two_a = 2 * f.a;
      std::int64_t k = arith::mod(f.b + f.a - 1, two_a);  // b' = k - a + 1 in (-a, a]
      std::int64_t nb = k - f.a + 1;
      f.b = nb;
      f.c = (f.b * f.b - D) / (4 * f.a);
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
}

std::vector<QuadForm> reduced_forms_all(std::int64_t D) {
  if (!is_discriminant(D)) throw Error(ErrorCode::BadDiscriminant, std::to_string(D) + " is not a negative discriminant");
  std::vector<QuadForm> out;
  const std::int64_t absD = -D;
  for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (arith::mod(b - D, 2) != 0) continue;
      std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      QuadForm f{a, b, num / (4 * a)};
      if (f.is_reduced()) out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuadForm> reduced_forms(std::int64_t D) {
  auto all = reduced_forms_all(D);
  std::erase_if(all, [](const QuadForm& f) { return !f.is_primitive(); });
  return all;
}

std::int64_t class_number(std::int64_t D) { return static_cast<std::int64_t>(reduced_forms(D).size()); }

QuadForm principal_form(std::int64_t D) {
  if (!is_discriminant(D)) throw Error(ErrorCode::BadDiscriminant, std::to_string(D) + " is not a negative discriminant");
  std::int64_t b = arith::mod(D, 2);
  return QuadForm{1, b, (b * b - D) / 4};
}

QuadForm compose(const QuadForm& f1, const QuadForm& f2) {
  const std::int64_t D = f1.discriminant();
  if (f2.discriminant() != D) {
    throw Error(ErrorCode::MismatchedDiscriminants, f1.str() + " and " + f2.str());
  }
  // Dirichlet composition in the arrangement of Cohen, Algorithm 5.4.7.
  QuadForm x = f1, y = f2;
  if (x.a > y.a) std::swap(x, y);
  const std::int64_t s = (x.b + y.b) / 2;
  const std::int64_t n = y.b - s;
  std::int64_t y1 = 0, d = 0;
  if (y.a % x.a == 0) {
    y1 = 0;
    d = x.a;
  } else {
    std::int64_t u = 0, v = 0;
    d = arith::ext_gcd(y.a, x.a, u, v);
    y1 = u;
  }
  std::int64_t x2 = 0, y2 = 0, d1 = 0;
  if (s % d == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    d1 = arith::ext_gcd(s, d, x2, y2);
    y2 = -y2;
  }
  const std::int64_t v1 = x.a / d1;
  const std::int64_t v2 = y.a / d1;
  const std::int64_t r = arith::mod(y1 * y2 * n - x2 * y.c, v1);
  const std::int64_t b3 = y.b + 2 * v2 * r;
  const std::int64_t a3 = v1 * v2;
  const std::int64_t num = b3 * b3 - D;
  if (num % (4 * a3) != 0) throw Error(ErrorCode::DomainError, "composition produced a non-integral form");
  return reduce(QuadForm{a3, b3, num / (4 * a3)});
}

QuadForm inverse(const QuadForm& f) { return reduce(QuadForm{f.a, -f.b, f.c}); }

std::int64_t form_order(const QuadForm& f) {
  const QuadForm id = principal_form(f.discriminant());
  const QuadForm start = reduce(f);
  QuadForm cur = start;
  std::int64_t n = 1;
  while (cur != id) {
    cur = compose(cur, start);
    ++n;
  }
  return n;
}

QuadForm prime_form_above_two(std::int64_t D) {
  if (!is_discriminant(D) || arith::mod(D, 8) != 1) {
    throw Error(ErrorCode::TwoNotSplit, "2 does not split for D = " + std::to_string(D));
  }
  // Any odd b has b^2 = 1 mod 8.
  const std::int64_t b = 1;
  return QuadForm{2, b, (b * b - D) / 8};
}

std::int64_t h2(std::int64_t D) { return form_order(prime_form_above_two(D)); }

ClassGroup::ClassGroup(std::int64_t D) : D_(D), forms_(reduced_forms(D)), identity_(principal_form(D)) {}

std::int64_t ClassGroup::index_of(const QuadForm& f) const {
  auto it = std::lower_bound(forms_.begin(), forms_.end(), f);
  if (it == forms_.end() || *it != f) return -1;
  return it - forms_.begin();
}

}  // namespace agmswarm::classes
