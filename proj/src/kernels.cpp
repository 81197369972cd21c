#include "pufkit/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>
#include <vector>

#if defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace pufkit::kernels {

namespace {

// ---------------------------------------------------------------------------
// Scalar reference kernels. These are the ground truth every SIMD variant is
// equivalence-tested against; keep them obviously correct.
// ---------------------------------------------------------------------------

std::uint64_t scalar_popcount_words(const std::uint64_t* w, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(w[i]));
  return total;
}

std::uint64_t scalar_xor_popcount_words(const std::uint64_t* a, const std::uint64_t* b,
                                        std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i)
    total += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

void scalar_accumulate_ones(std::uint32_t* counts, const std::uint64_t* bits,
                            std::size_t nbits) {
  const std::size_t full_words = nbits / 64;
  for (std::size_t w = 0; w < full_words; ++w) {
    std::uint64_t v = bits[w];
    while (v != 0) {
      const int b = std::countr_zero(v);
      ++counts[w * 64 + static_cast<std::size_t>(b)];
      v &= v - 1;
    }
  }
  const std::size_t tail = nbits % 64;
  if (tail != 0) {
    std::uint64_t v = bits[full_words];
    for (std::size_t b = 0; b < tail; ++b) counts[full_words * 64 + b] += (v >> b) & 1u;
  }
}

#if defined(__ARM_NEON)

std::uint64_t neon_popcount_words(const std::uint64_t* w, std::size_t n) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(w + i));
    acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
  }
  std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(w[i]));
  return total;
}

std::uint64_t neon_xor_popcount_words(const std::uint64_t* a, const std::uint64_t* b,
                                      std::size_t n) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint8x16_t v = vreinterpretq_u8_u64(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
  }
  std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

#endif  // __ARM_NEON

}  // namespace

#if defined(PUFKIT_HAVE_AVX2)
// Defined in kernels_avx2.cpp, compiled with -mavx2.
namespace avx2 {
std::uint64_t popcount_words(const std::uint64_t* w, std::size_t n);
std::uint64_t xor_popcount_words(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
void accumulate_ones(std::uint32_t* counts, const std::uint64_t* bits, std::size_t nbits);
}  // namespace avx2
#endif

namespace {

std::vector<Implementation> build_implementations() {
  std::vector<Implementation> impls;
  impls.push_back({"scalar", &scalar_popcount_words, &scalar_xor_popcount_words,
                   &scalar_accumulate_ones});
#if defined(PUFKIT_HAVE_AVX2)
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2")) {
    impls.push_back({"avx2", &avx2::popcount_words, &avx2::xor_popcount_words,
                     &avx2::accumulate_ones});
  }
#endif
#endif
#if defined(__ARM_NEON)
  impls.push_back({"neon", &neon_popcount_words, &neon_xor_popcount_words,
                   &scalar_accumulate_ones});
#endif
  return impls;
}

const Implementation* resolve_active() {
  const auto impls = implementations();
  const char* force = std::getenv("PUFKIT_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "0") != 0) return &impls[0];
  return &impls[impls.size() - 1];
}

}  // namespace

std::span<const Implementation> implementations() {
  static const std::vector<Implementation> impls = build_implementations();
  return impls;
}

const Implementation& active() {
  static const Implementation* impl = resolve_active();
  return *impl;
}

std::uint64_t xor_popcount_range(std::span<const std::uint64_t> a,
                                 std::span<const std::uint64_t> b, std::size_t first_bit,
                                 std::size_t last_bit) {
  if (first_bit >= last_bit) return 0;
  const std::size_t first_word = first_bit / 64;
  const std::size_t last_word = (last_bit - 1) / 64;  // inclusive

  const std::uint64_t head_mask = ~std::uint64_t{0} << (first_bit % 64);
  const std::uint64_t tail_mask =
      (last_bit % 64 == 0) ? ~std::uint64_t{0} : ~std::uint64_t{0} >> (64 - last_bit % 64);

  if (first_word == last_word) {
    return static_cast<std::uint64_t>(
        std::popcount((a[first_word] ^ b[first_word]) & head_mask & tail_mask));
  }

  std::uint64_t total =
      static_cast<std::uint64_t>(std::popcount((a[first_word] ^ b[first_word]) & head_mask));
  total += xor_popcount_words(a.data() + first_word + 1, b.data() + first_word + 1,
                              last_word - first_word - 1);
  total += static_cast<std::uint64_t>(
      std::popcount((a[last_word] ^ b[last_word]) & tail_mask));
  return total;
}

}  // namespace pufkit::kernels
