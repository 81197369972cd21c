// AVX2 kernel variants. This translation unit is compiled with -mavx2; the
// dispatcher in kernels.cpp only routes here after __builtin_cpu_supports
// confirms the CPU can run it.

#include <immintrin.h>

#include <array>
#include <bit>
#include <cstdint>

namespace pufkit::kernels::avx2 {

namespace {

// Per-byte popcount of a 256-bit lane via two nibble table lookups
// (Mula's PSHUFB method).
inline __m256i popcount_epi8(__m256i v) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline std::uint64_t horizontal_sum_epi64(__m256i v) {
  const __m128i lo = _mm256_castsi256_si128(v);
  const __m128i hi = _mm256_extracti128_si256(v, 1);
  const __m128i s = _mm_add_epi64(lo, hi);
  return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
         static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

// counts[i] += bit i of the byte, 8 lanes at a time.
struct ByteExpandTable {
  alignas(32) std::uint32_t rows[256][8];
  ByteExpandTable() {
    for (int b = 0; b < 256; ++b)
      for (int i = 0; i < 8; ++i) rows[b][i] = static_cast<std::uint32_t>((b >> i) & 1);
  }
};
const ByteExpandTable expand_table;

}  // namespace

std::uint64_t popcount_words(const std::uint64_t* w, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_epi8(v), _mm256_setzero_si256()));
  }
  std::uint64_t total = horizontal_sum_epi64(acc);
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(w[i]));
  return total;
}

std::uint64_t xor_popcount_words(const std::uint64_t* a, const std::uint64_t* b,
                                 std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i v = _mm256_xor_si256(va, vb);
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_epi8(v), _mm256_setzero_si256()));
  }
  std::uint64_t total = horizontal_sum_epi64(acc);
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

void accumulate_ones(std::uint32_t* counts, const std::uint64_t* bits, std::size_t nbits) {
  const std::size_t full_bytes = nbits / 8;
  const auto* raw = reinterpret_cast<const std::uint8_t*>(bits);
  for (std::size_t byte = 0; byte < full_bytes; ++byte) {
    const __m256i add =
        _mm256_load_si256(reinterpret_cast<const __m256i*>(expand_table.rows[raw[byte]]));
    __m256i* dst = reinterpret_cast<__m256i*>(counts + byte * 8);
    _mm256_storeu_si256(dst, _mm256_add_epi32(_mm256_loadu_si256(dst), add));
  }
  for (std::size_t i = full_bytes * 8; i < nbits; ++i)
    counts[i] += (bits[i / 64] >> (i % 64)) & 1u;
}

}  // namespace pufkit::kernels::avx2
