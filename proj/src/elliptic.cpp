#include "agmswarm/elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <span>

#include "agmswarm/arith.hpp"
#include "agmswarm/error.hpp"
#include "agmswarm/kernels.hpp"

namespace agmswarm::elliptic {

void require_curve_domain(const Field& F, FieldElement lambda) {
  if (F.p() <= 3) throw Error(ErrorCode::SmallCharacteristic, "curve operations need p >= 5");
  if (lambda.is_zero() || lambda == F.one()) {
    throw Error(ErrorCode::BadLambda, "lambda must not be 0 or 1");
  }
}

bool within_hasse_bound(std::int64_t t, std::uint64_t q) {
  auto t2 = static_cast<unsigned __int128>(t < 0 ? -t : t);
  return t2 * t2 <= static_cast<unsigned __int128>(4) * q;
}

CharacterSums::CharacterSums(std::shared_ptr<const Field> field) : field_(std::move(field)) {
  const Field& F = *field_;
  const std::uint64_t q = F.q();
  if (F.has_tables()) {
    auto table = F.quad_char_table();
    phi_.assign(table.begin(), table.end());
  } else {
    phi_.resize(q);
    for (std::uint64_t i = 0; i < q; ++i) phi_[i] = static_cast<std::int8_t>(F.quad_char(F.element(i)));
  }
  phi_minus_one_.resize(q);
  const FieldElement one = F.one();
  for (std::uint64_t i = 0; i < q; ++i) {
    phi_minus_one_[i] = phi_[F.sub(F.element(i), one).index()];
  }
}

std::int64_t CharacterSums::product_sum(FieldElement c) const {
  const Field& F = *field_;
  const std::size_t q = F.q();
  std::span<const std::int8_t> a(phi_), b(phi_minus_one_);
  if (F.r() == 1) {
    // phi(x - c) is phi shifted cyclically by c.
    const std::size_t s = c.index();
    std::span<const std::int8_t> ph(phi_);
    return kernels::triple_sign_sum(a.first(s), b.first(s), ph.subspan(q - s)) +
           kernels::triple_sign_sum(a.subspan(s), b.subspan(s), ph.first(q - s));
  }
  thread_local std::vector<std::int8_t> shifted;
  shifted.resize(q);
  for (std::size_t i = 0; i < q; ++i) shifted[i] = phi_[F.sub(F.element(i), c).index()];
  return kernels::triple_sign_sum(a, b, shifted);
}

std::int64_t CharacterSums::trace(FieldElement lambda) const {
  require_curve_domain(*field_, lambda);
  return -product_sum(lambda);
}

std::int64_t trace_char_sum(const std::shared_ptr<const Field>& F, FieldElement lambda) {
  require_curve_domain(*F, lambda);
  return CharacterSums(F).trace(lambda);
}

std::uint64_t point_count_brute(const Field& F, FieldElement lambda, std::uint64_t guard) {
  require_curve_domain(F, lambda);
  if (F.q() > guard) throw Error(ErrorCode::GuardExceeded, "q exceeds the brute-force guard");
  std::uint64_t count = 1;  // point at infinity
  for (std::uint64_t i = 0; i < F.q(); ++i) {
    FieldElement x = F.element(i);
    FieldElement fx = F.mul(F.mul(x, F.sub(x, F.one())), F.sub(x, lambda));
    count += static_cast<std::uint64_t>(1 + F.quad_char(fx));
  }
  return count;
}

namespace {

struct Point {
  FieldElement x, y;
  bool infinity = true;
};

// y^2 = x^3 + A x^2 + B x.
class Curve {
 public:
  Curve(const Field& F, FieldElement A, FieldElement B) : F_(F), A_(A), B_(B) {}

  Point add(const Point& P, const Point& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    FieldElement slope;
    if (P.x == Q.x) {
      if (P.y != Q.y || P.y.is_zero()) return Point{};
      FieldElement x2 = F_.sqr(P.x);
      FieldElement num = F_.add(F_.add(F_.mul(F_.from_int(3), x2), F_.mul(F_.from_int(2), F_.mul(A_, P.x))), B_);
      slope = F_.div(num, F_.add(P.y, P.y));
    } else {
      slope = F_.div(F_.sub(Q.y, P.y), F_.sub(Q.x, P.x));
    }
    FieldElement x3 = F_.sub(F_.sub(F_.sub(F_.sqr(slope), A_), P.x), Q.x);
    FieldElement y3 = F_.sub(F_.mul(slope, F_.sub(P.x, x3)), P.y);
    return Point{x3, y3, false};
  }

  Point scale(Point P, std::uint64_t k) const {
    Point acc{};
    while (k) {
      if (k & 1) acc = add(acc, P);
      P = add(P, P);
      k >>= 1;
    }
    return acc;
  }

 private:
  const Field& F_;
  FieldElement A_, B_;
};

FieldElement j_from_ab(const Field& F, FieldElement A, FieldElement B) {
  // y^2 = x^3 + A x^2 + B x: j = 256 (A^2 - 3B)^3 / (B^2 (A^2 - 4B)).
  FieldElement A2 = F.sqr(A);
  FieldElement c4 = F.sub(A2, F.mul(F.from_int(3), B));
  FieldElement num = F.mul(F.from_int(256), F.mul(F.sqr(c4), c4));
  FieldElement den = F.mul(F.sqr(B), F.sub(A2, F.mul(F.from_int(4), B)));
  return F.div(num, den);
}

}  // namespace

GroupShape group_structure(const Field& F, FieldElement lambda, std::uint64_t guard) {
  require_curve_domain(F, lambda);
  if (F.q() > guard) throw Error(ErrorCode::GuardExceeded, "q exceeds the brute-force guard");
  const std::uint64_t q = F.q();
  // Square roots by table so the enumeration works for any q.
  std::vector<std::int64_t> root(q, -1);
  for (std::uint64_t i = 0; i < q; ++i) {
    FieldElement y = F.element(i);
    auto& slot = root[F.sqr(y).index()];
    if (slot < 0) slot = static_cast<std::int64_t>(i);
  }
  std::vector<Point> points;
  const FieldElement A = F.neg(F.add(F.one(), lambda));
  for (std::uint64_t i = 0; i < q; ++i) {
    FieldElement x = F.element(i);
    FieldElement fx = F.mul(F.mul(x, F.sub(x, F.one())), F.sub(x, lambda));
    std::int64_t r = root[fx.index()];
    if (r < 0) continue;
    FieldElement y = F.element(static_cast<std::uint64_t>(r));
    points.push_back(Point{x, y, false});
    if (!y.is_zero()) points.push_back(Point{x, F.neg(y), false});
  }
  const std::uint64_t N = points.size() + 1;
  const auto factors = arith::factor(N);
  Curve curve(F, A, lambda);
  std::uint64_t exponent = 1;
  for (const Point& P : points) {
    if (exponent == N) break;
    std::uint64_t ord = arith::element_order(
        N, factors, [&](std::uint64_t k) { return curve.scale(P, k); },
        [](const Point& R) { return R.infinity; });
    exponent = std::lcm(exponent, ord);
  }
  return GroupShape{N / exponent, exponent};
}

FieldElement j_invariant(const Field& F, FieldElement lambda) {
  require_curve_domain(F, lambda);
  return j_from_ab(F, F.neg(F.add(F.one(), lambda)), lambda);
}

std::vector<FieldElement> lambda_orbit(const Field& F, FieldElement lambda) {
  if (lambda.is_zero() || lambda == F.one()) {
    throw Error(ErrorCode::BadLambda, "lambda must not be 0 or 1");
  }
  const FieldElement one = F.one();
  const FieldElement one_minus = F.sub(one, lambda);
  const FieldElement minus_one = F.sub(lambda, one);
  std::vector<FieldElement> orbit = {
      lambda,
      F.inv(lambda),
      one_minus,
      F.inv(one_minus),
      F.div(lambda, minus_one),
      F.div(minus_one, lambda),
  };
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

std::uint64_t count_lambdas(const CharacterSums& sums, std::int64_t t, FieldElement j,
                            std::uint64_t guard) {
  const Field& F = sums.field();
  if (F.p() <= 3) throw Error(ErrorCode::SmallCharacteristic, "curve operations need p >= 5");
  if (F.q() > guard) throw Error(ErrorCode::GuardExceeded, "q exceeds the brute-force guard");
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i < F.q(); ++i) {
    FieldElement lambda = F.element(i);
    if (lambda == F.one() || F.quad_char(lambda) != 1) continue;
    if (j_invariant(F, lambda) == j && sums.trace(lambda) == t) ++count;
  }
  return count;
}

FieldElement two_isogeny_image_j(const Field& F, FieldElement lambda) {
  require_curve_domain(F, lambda);
  // E: y^2 = x(x^2 + a x + b), a = -(1 + lambda), b = lambda;
  // image: y^2 = x(x^2 - 2a x + a^2 - 4b).
  FieldElement a = F.neg(F.add(F.one(), lambda));
  FieldElement b = lambda;
  FieldElement A = F.neg(F.add(a, a));
  FieldElement B = F.sub(F.sqr(a), F.mul(F.from_int(4), b));
  return j_from_ab(F, A, B);
}

}  // namespace agmswarm::elliptic
