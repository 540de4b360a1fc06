#include <immintrin.h>

#include "agmswarm/kernels.hpp"

namespace agmswarm::kernels::detail {
namespace {

// Widen 32 signed bytes to 8 int32 partial sums.
inline __m256i widen_sum(__m256i bytes) {
  const __m256i ones8 = _mm256_set1_epi8(1);
  const __m256i ones16 = _mm256_set1_epi16(1);
  __m256i pairs = _mm256_maddubs_epi16(ones8, bytes);
  return _mm256_madd_epi16(pairs, ones16);
}

inline std::int64_t horizontal_sum(__m256i v) {
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  std::int64_t s = 0;
  for (auto x : lanes) s += x;
  return s;
}

// Each int32 lane gains at most 4 per block, so flush well before overflow.
constexpr std::size_t kFlushBlocks = std::size_t{1} << 24;

}  // namespace

std::int64_t triple_sign_sum_avx2(const std::int8_t* a, const std::int8_t* b, const std::int8_t* c,
                                  std::size_t n) {
  std::int64_t total = 0;
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0, blocks = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
    // sign_epi8(x, y) = x * sgn(y), exact for entries in {-1, 0, 1}.
    __m256i prod = _mm256_sign_epi8(_mm256_sign_epi8(va, vb), vc);
    acc = _mm256_add_epi32(acc, widen_sum(prod));
    if (++blocks == kFlushBlocks) {
      total += horizontal_sum(acc);
      acc = _mm256_setzero_si256();
      blocks = 0;
    }
  }
  total += horizontal_sum(acc);
  for (; i < n; ++i) total += a[i] * b[i] * c[i];
  return total;
}

std::int64_t sign_sum_avx2(const std::int8_t* a, std::size_t n) {
  std::int64_t total = 0;
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0, blocks = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi32(acc, widen_sum(va));
    if (++blocks == kFlushBlocks) {
      total += horizontal_sum(acc);
      acc = _mm256_setzero_si256();
      blocks = 0;
    }
  }
  total += horizontal_sum(acc);
  for (; i < n; ++i) total += a[i];
  return total;
}

}  // namespace agmswarm::kernels::detail
