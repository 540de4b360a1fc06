#include "doctest.h"

#include <random>

#include "agmswarm/arith.hpp"
#include "agmswarm/error.hpp"
#include "agmswarm/hurwitz.hpp"
#include "agmswarm/quadratic_forms.hpp"

using namespace agmswarm;
using namespace agmswarm::classes;

namespace {

// f o [[x, z], [y, w]] for a unimodular matrix.
QuadForm transform(const QuadForm& f, std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w) {
  const auto val = [&](std::int64_t u, std::int64_t v) { return f.a * u * u + f.b * u * v + f.c * v * v; };
  const std::int64_t a = val(x, y), c = val(z, w);
  const std::int64_t b = 2 * f.a * x * z + f.b * (x * w + y * z) + 2 * f.c * y * w;
  return {a, b, c};
}

// A form equivalent to f whose leading coefficient is coprime to m.
QuadForm coprime_representative(const QuadForm& f, std::int64_t m) {
  for (std::int64_t x = 0; x < 60; ++x)
    for (std::int64_t y = 0; y < 60; ++y) {
      if (arith::gcd(x, y) != 1) continue;
      std::int64_t z = 0, w = 0;
      arith::ext_gcd(x, y, w, z);  // x w + y z' = 1 with z = -z'
      z = -z;
      const QuadForm g = transform(f, x, y, z, w);
      if (g.a > 0 && arith::gcd(g.a, m) == 1) return g;
    }
  FAIL("no coprime representative");
  return f;
}

// Composition through a united pair: leading coefficients coprime and
// B solving B = b1 mod 2a1, B = b2 mod 2a2, B^2 = D mod 4 a1 a2.
QuadForm united_compose(const QuadForm& f, const QuadForm& g0) {
  const std::int64_t D = f.discriminant();
  const QuadForm g = coprime_representative(g0, f.a);
  const std::int64_t A = f.a * g.a;
  for (std::int64_t B = -A; B < A; ++B) {
    if (arith::mod(B - f.b, 2 * f.a) != 0 || arith::mod(B - g.b, 2 * g.a) != 0) continue;
    if (arith::mod(B * B - D, 4 * A) != 0) continue;
    return reduce({A, B, (B * B - D) / (4 * A)});
  }
  FAIL("no united form");
  return f;
}

}  // namespace

TEST_CASE("reduction examples") {
  CHECK(reduce({1, 1, 2}) == QuadForm{1, 1, 2});
  CHECK(reduce({2, -1, 3}) == QuadForm{2, -1, 3});
  CHECK(reduce({3, 7, 5}) == QuadForm{1, 1, 3});
  CHECK_THROWS_AS(reduce({1, 3, 1}), Error);
  CHECK_THROWS_AS(reduce({-1, 1, -2}), Error);
}

TEST_CASE("reduction round trip on random transforms") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coef(-4, 4);
  for (std::int64_t D = -3; D >= -10000; D -= 37) {
    if (!is_discriminant(D)) continue;
    for (const auto& f : reduced_forms_all(D)) {
      CHECK(f.is_reduced());
      CHECK(reduce(f) == f);
      for (int k = 0; k < 3; ++k) {
        std::int64_t x = coef(rng), y = coef(rng);
        if (arith::gcd(x, y) != 1) continue;
        std::int64_t z = 0, w = 0;
        arith::ext_gcd(x, y, w, z);
        z = -z;
        const QuadForm g = transform(f, x, y, z, w);
        CHECK(g.discriminant() == D);
        CHECK(reduce(g) == f);
      }
    }
  }
}

TEST_CASE("class numbers") {
  CHECK(class_number(-3) == 1);
  CHECK(class_number(-4) == 1);
  CHECK(class_number(-7) == 1);
  CHECK(class_number(-15) == 2);
  CHECK(class_number(-23) == 3);
  CHECK(class_number(-127) == 5);
  CHECK(class_number(-207) == 6);
  CHECK(class_number(-255) == 12);
  CHECK(class_number(-271) == 11);
  CHECK(class_number(-12) == 1);
  CHECK(reduced_forms_all(-12).size() == 2);
  CHECK_THROWS_AS(class_number(-5), Error);
  CHECK_THROWS_AS(class_number(8), Error);
}

TEST_CASE("fundamental discriminants") {
  CHECK(is_fundamental(-3));
  CHECK(is_fundamental(-4));
  CHECK(is_fundamental(-8));
  CHECK(is_fundamental(-23));
  CHECK_FALSE(is_fundamental(-12));
  CHECK_FALSE(is_fundamental(-207));
  CHECK_FALSE(is_fundamental(-16));
}

TEST_CASE("composition examples and group axioms") {
  CHECK(compose({2, 1, 3}, {2, 1, 3}) == QuadForm{2, -1, 3});
  CHECK_THROWS_AS(compose({1, 1, 2}, {2, 1, 3}), Error);
  for (std::int64_t D = -3; D >= -2000; --D) {
    if (!is_discriminant(D)) continue;
    const ClassGroup G(D);
    const auto& forms = G.forms();
    for (const auto& f : forms) {
      CHECK(compose(G.identity(), f) == f);
      CHECK(compose(f, inverse(f)) == G.identity());
      CHECK(form_order(f) <= G.order());
      CHECK(G.order() % form_order(f) == 0);
    }
    if (forms.size() <= 12) {
      for (const auto& f : forms)
        for (const auto& g : forms) {
          const QuadForm fg = compose(f, g);
          CHECK(G.index_of(fg) >= 0);
          CHECK(fg == compose(g, f));
          for (const auto& k : forms) CHECK(compose(fg, k) == compose(f, compose(g, k)));
        }
    }
  }
}

TEST_CASE("composition against united forms") {
  for (std::int64_t D : {-23, -47, -71, -135, -207, -255, -399, -1151, -1996}) {
    const auto forms = reduced_forms(D);
    for (const auto& f : forms)
      for (const auto& g : forms) CHECK(compose(f, g) == united_compose(f, g));
  }
}

TEST_CASE("prime form above two") {
  CHECK(h2(-15) == 2);
  CHECK(h2(-23) == 3);
  CHECK(h2(-255) == 6);
  CHECK(h2(-7) == 1);
  CHECK(h2(-207) == 6);
  CHECK(h2(-271) == 11);
  CHECK(prime_form_above_two(-23) == QuadForm{2, 1, 3});
  CHECK_THROWS_AS(h2(-20), Error);
  CHECK_THROWS_AS(h2(-11), Error);
  for (std::int64_t D = -7; D >= -2000; D -= 8) {
    const QuadForm f = prime_form_above_two(D);
    CHECK(form_order(reduce({f.a, -f.b, f.c})) == h2(D));
    CHECK(class_number(D) % h2(D) == 0);
  }
}

TEST_CASE("Hurwitz class numbers") {
  CHECK(hurwitz_H(0).twelfths == -1);
  CHECK(hurwitz_H(0).str() == "-1/12");
  CHECK(hurwitz_H(1).twelfths == 0);
  CHECK(hurwitz_H(2).twelfths == 0);
  CHECK(hurwitz_H(3).twelfths == 4);
  CHECK(hurwitz_H(4).twelfths == 6);
  CHECK(hurwitz_H(7).twelfths == 12);
  CHECK(hurwitz_H(7).str() == "1");
  CHECK(hurwitz_H(12).twelfths == 16);  // h(-12) + H(3)
  CHECK(hurwitz_H(16).twelfths == 18);  // h(-16) + H(4)
  CHECK(hurwitz_H(27).twelfths == 16);  // h(-27) + H(3)
}

TEST_CASE("dual Hurwitz definitions agree") {
  for (std::int64_t N = 5; N <= 2000; ++N) CHECK(hurwitz_H(N) == hurwitz_H_order_sum(N));
}

TEST_CASE("Hurwitz-Kronecker relation") {
  auto relation = [](std::int64_t p) {
    HurwitzValue sum;
    for (std::int64_t t = -2 * p; t <= 2 * p; ++t)
      if (t * t <= 4 * p) sum += hurwitz_H(4 * p - t * t);
    return sum;
  };
  CHECK(relation(7).twelfths == 12 * 14);
  for (std::int64_t p = 2; p <= 200; ++p)
    if (arith::is_prime(static_cast<std::uint64_t>(p))) CHECK(relation(p).twelfths == 24 * p);
}

TEST_CASE("admissible traces") {
  CHECK(admissible_traces(7, 7).traces == std::vector<std::int64_t>{0});
  CHECK(admissible_traces(11, 11).traces == std::vector<std::int64_t>{-4, 4});
  CHECK(admissible_traces(271, 271).traces == std::vector<std::int64_t>{-32, -24, -16, -8, 0, 8, 16, 24, 32});
  CHECK_THROWS_AS(admissible_traces(13, 13), Error);
  CHECK_THROWS_AS(admissible_traces(27, 3), Error);
}

TEST_CASE("order decompositions") {
  auto d = order_decomposition(16, 271);
  CHECK(d.disc_frobenius == 256 - 1084);
  CHECK(d.fundamental == -23);
  CHECK(d.conductor == 6);
  CHECK(d.candidates == std::vector<std::int64_t>{-23, -207});
  CHECK(order_decomposition(8, 271).candidates == std::vector<std::int64_t>{-255});
  CHECK(order_decomposition(0, 271).candidates == std::vector<std::int64_t>{-271});
  for (std::uint64_t q = 7; q <= 2000; q += 4) {
    if (arith::factor(q).size() != 1 || q % 3 == 0) continue;
    const std::uint64_t p = arith::factor(q).front().first;
    for (std::int64_t t : admissible_traces(q, p).traces)
      for (std::int64_t D : order_decomposition(t, q).candidates) CHECK(arith::mod(D, 8) == 1);
  }
}

TEST_CASE("splitting discriminants") {
  std::int64_t dk = 0, f = 0;
  split_discriminant(-207, dk, f);
  CHECK(dk == -23);
  CHECK(f == 3);
  split_discriminant(-16, dk, f);
  CHECK(dk == -4);
  CHECK(f == 2);
  split_discriminant(-27, dk, f);
  CHECK(dk == -3);
  CHECK(f == 3);
}
