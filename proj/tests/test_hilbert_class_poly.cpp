#include "doctest.h"

#include "agmswarm/error.hpp"
#include "agmswarm/hilbert_class_poly.hpp"
#include "agmswarm/quadratic_forms.hpp"

using namespace agmswarm;
using namespace agmswarm::classes;

namespace {

std::vector<BigInt> ints(std::initializer_list<const char*> xs) {
  std::vector<BigInt> out;
  for (const char* x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("small class polynomials") {
  CHECK(hilbert_class_poly(-3).coeffs == ints({"0", "1"}));
  CHECK(hilbert_class_poly(-4).coeffs == ints({"-1728", "1"}));
  const auto h7 = hilbert_class_poly(-7);
  CHECK(h7.coeffs == ints({"3375", "1"}));
  CHECK(h7.str() == "x + 3375");
  CHECK(hilbert_class_poly(-8).coeffs == ints({"-8000", "1"}));
}

TEST_CASE("degree two and three") {
  const auto h15 = hilbert_class_poly(-15);
  CHECK(h15.degree() == 2);
  CHECK(h15.coeffs == ints({"-121287375", "191025", "1"}));
  const auto h23 = hilbert_class_poly(-23);
  CHECK(h23.degree() == 3);
  CHECK(h23.coeffs == ints({"12771880859375", "-5151296875", "3491750", "1"}));
}

TEST_CASE("degree equals the class number") {
  for (std::int64_t D : {-20, -56, -87, -127, -207, -255, -271, -399}) {
    CHECK(hilbert_class_poly(D).degree() == static_cast<std::size_t>(class_number(D)));
  }
}

TEST_CASE("guard") {
  try {
    hilbert_class_poly(-255, 5);
    FAIL("expected guard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GuardExceeded);
  }
}

TEST_CASE("reduction and evaluation mod p") {
  const auto h7 = hilbert_class_poly(-7);
  CHECK(reduce_mod(h7, 11) == std::vector<std::uint64_t>{3375 % 11, 1});
  auto F = Field::create(11, 1);
  // j = -3375 is a root.
  CHECK(evaluate(*F, h7, F->from_int(-3375)).is_zero());
  CHECK_FALSE(evaluate(*F, h7, F->from_int(1)).is_zero());
  HcpCache cache;
  const auto& a = cache.get(-23);
  const auto& b = cache.get(-23);
  CHECK(&a == &b);
}
