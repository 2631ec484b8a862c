#include "mixspec/kernels.hpp"

#include <immintrin.h>

namespace mixspec::kernels {

namespace {

// Per-32-bit-lane popcount: nibble lookup, then widen byte counts to dwords.
inline __m256i popcount_epi32(__m256i x) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low4 = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(x, low4);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), low4);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  const __m256i words = _mm256_maddubs_epi16(bytes, _mm256_set1_epi8(1));
  return _mm256_madd_epi16(words, _mm256_set1_epi16(1));
}

}  // namespace

void sweep_avx2(const SweepProblem& p, std::uint32_t first, std::size_t count,
                std::uint32_t* fail, std::uint32_t* cut) {
  const std::size_t n = p.adjacency.size();
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i zero = _mm256_setzero_si256();

  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    const __m256i m = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(first + i)), lane);
    __m256i bad = zero;
    __m256i twice_cut = zero;
    for (std::size_t v = 0; v < n; ++v) {
      const __m128i shift = _mm_cvtsi32_si128(static_cast<int>(v));
      const __m256i own = _mm256_sub_epi32(zero, _mm256_and_si256(_mm256_srl_epi32(m, shift), one));
      const __m256i opp = _mm256_and_si256(_mm256_xor_si256(m, own),
                                           _mm256_set1_epi32(static_cast<int>(p.adjacency[v])));
      const __m256i mix = popcount_epi32(opp);
      twice_cut = _mm256_add_epi32(twice_cut, mix);
      const __m256i below = _mm256_cmpgt_epi32(_mm256_set1_epi32(p.threshold[v]), _mm256_add_epi32(mix, mix));
      bad = _mm256_or_si256(bad, _mm256_and_si256(below, _mm256_set1_epi32(static_cast<int>(1u << v))));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(fail + i), bad);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(cut + i), _mm256_srli_epi32(twice_cut, 1));
  }
  if (i < count) sweep_scalar(p, first + static_cast<std::uint32_t>(i), count - i, fail + i, cut + i);
}

}  // namespace mixspec::kernels
