#include "doctest.h"

#include <random>
#include <vector>

#include "agmswarm/kernels.hpp"

using namespace agmswarm::kernels;

namespace {

std::vector<std::int8_t> random_signs(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-1, 1);
  std::vector<std::int8_t> v(n);
  for (auto& x : v) x = static_cast<std::int8_t>(d(rng));
  return v;
}

struct IsaGuard {
  Isa saved = active_isa();
  ~IsaGuard() { set_active_isa(saved); }
};

}  // namespace

TEST_CASE("scalar kernels on fixed input") {
  const std::vector<std::int8_t> a{1, -1, 0, 1, 1}, b{1, 1, 1, -1, 1}, c{-1, -1, 1, -1, 1};
  CHECK(triple_sign_sum_scalar(a, b, c) == -1 + 1 + 0 + 1 + 1);
  CHECK(sign_sum_scalar(a) == 2);
}

TEST_CASE("dispatched kernels match the scalar reference") {
  IsaGuard guard;
  std::mt19937_64 rng(20240611);
  for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
    set_active_isa(isa);
    for (std::size_t n : {0u, 1u, 31u, 32u, 33u, 255u, 4096u, 70001u, 300000u}) {
      const auto a = random_signs(n, rng), b = random_signs(n, rng), c = random_signs(n, rng);
      CHECK(triple_sign_sum(a, b, c) == triple_sign_sum_scalar(a, b, c));
      CHECK(sign_sum(a) == sign_sum_scalar(a));
    }
  }
}

TEST_CASE("vector kernel handles long runs without overflow") {
  IsaGuard guard;
  set_active_isa(Isa::Avx2);
  const std::size_t n = 1u << 22;
  const std::vector<std::int8_t> ones(n, 1), neg(n, -1);
  CHECK(triple_sign_sum(ones, ones, ones) == static_cast<std::int64_t>(n));
  CHECK(triple_sign_sum(neg, neg, neg) == -static_cast<std::int64_t>(n));
  CHECK(sign_sum(neg) == -static_cast<std::int64_t>(n));
}

TEST_CASE("dispatch falls back when the vector set is unavailable") {
  IsaGuard guard;
  const Isa got = set_active_isa(Isa::Avx2);
  CHECK(got == detected_isa());
  CHECK(set_active_isa(Isa::Scalar) == Isa::Scalar);
  CHECK(to_string(Isa::Scalar) == "scalar");
}
