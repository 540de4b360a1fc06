#include "agmswarm/kernels.hpp"

#include <atomic>
#include <cassert>

namespace agmswarm::kernels {
namespace {

Isa probe() {
#if defined(AGMSWARM_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{probe()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  active().store(isa, std::memory_order_relaxed);
  return isa;
}

std::int64_t triple_sign_sum_scalar(std::span<const std::int8_t> a,
                                    std::span<const std::int8_t> b,
                                    std::span<const std::int8_t> c) {
  assert(a.size() == b.size() && b.size() == c.size());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i] * c[i];
  return sum;
}

std::int64_t sign_sum_scalar(std::span<const std::int8_t> a) {
  std::int64_t sum = 0;
  for (auto v : a) sum += v;
  return sum;
}

std::int64_t triple_sign_sum(std::span<const std::int8_t> a, std::span<const std::int8_t> b,
                             std::span<const std::int8_t> c) {
  assert(a.size() == b.size() && b.size() == c.size());
#if defined(AGMSWARM_BUILD_AVX2)
  if (active_isa() == Isa::Avx2) return detail::triple_sign_sum_avx2(a.data(), b.data(), c.data(), a.size());
#endif
  return triple_sign_sum_scalar(a, b, c);
}

std::int64_t sign_sum(std::span<const std::int8_t> a) {
#if defined(AGMSWARM_BUILD_AVX2)
  if (active_isa() == Isa::Avx2) return detail::sign_sum_avx2(a.data(), a.size());
#endif
  return sign_sum_scalar(a);
}

}  // namespace agmswarm::kernels
