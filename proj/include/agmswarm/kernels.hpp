#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Character-sum inner loops. Every kernel has a scalar reference and, where
// the CPU allows, a vector variant selected at runtime; both must agree
// bit-for-bit.
namespace agmswarm::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Best instruction set this build and CPU support.
Isa detected_isa();
/// Currently dispatched instruction set (detected unless overridden).
Isa active_isa();
/// Override dispatch, e.g. to compare variants in tests. Falls back to
/// Scalar when the requested set is unavailable; returns what was set.
Isa set_active_isa(Isa isa);

/// Sum over i of a[i] * b[i] * c[i] for sign vectors with entries in {-1, 0, 1}.
/// All spans must have equal length.
std::int64_t triple_sign_sum(std::span<const std::int8_t> a, std::span<const std::int8_t> b,
                             std::span<const std::int8_t> c);

std::int64_t triple_sign_sum_scalar(std::span<const std::int8_t> a,
                                    std::span<const std::int8_t> b,
                                    std::span<const std::int8_t> c);

/// Sum over i of a[i] for a sign vector.
std::int64_t sign_sum(std::span<const std::int8_t> a);
std::int64_t sign_sum_scalar(std::span<const std::int8_t> a);

namespace detail {
#if defined(AGMSWARM_BUILD_AVX2)
std::int64_t triple_sign_sum_avx2(const std::int8_t* a, const std::int8_t* b,
                                  const std::int8_t* c, std::size_t n);
std::int64_t sign_sum_avx2(const std::int8_t* a, std::size_t n);
#endif
}  // namespace detail

}  // namespace agmswarm::kernels
