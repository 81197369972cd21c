#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace pufkit::kernels {

using PopcountFn = std::uint64_t (*)(const std::uint64_t*, std::size_t);
using XorPopcountFn = std::uint64_t (*)(const std::uint64_t*, const std::uint64_t*, std::size_t);
using AccumulateFn = void (*)(std::uint32_t*, const std::uint64_t*, std::size_t);

/// One compiled kernel variant. `accumulate_ones` adds bit i of the packed
/// input to counts[i] for i in [0, nbits); callers guarantee counts has
/// nbits entries and the input has ceil(nbits/64) words.
struct Implementation {
  const char* name;
  PopcountFn popcount_words;
  XorPopcountFn xor_popcount_words;
  AccumulateFn accumulate_ones;
};

/// All variants compiled into this binary; index 0 is always the scalar
/// reference. SIMD variants appear only if usable on the running CPU.
std::span<const Implementation> implementations();

/// The variant dispatch resolved to at startup (widest usable SIMD, or the
/// scalar reference when PUFKIT_FORCE_SCALAR=1 is set in the environment).
const Implementation& active();

inline std::uint64_t popcount_words(const std::uint64_t* w, std::size_t n) {
  return active().popcount_words(w, n);
}

inline std::uint64_t xor_popcount_words(const std::uint64_t* a, const std::uint64_t* b,
                                        std::size_t n) {
  return active().xor_popcount_words(a, b, n);
}

inline void accumulate_ones(std::uint32_t* counts, const std::uint64_t* bits,
                            std::size_t nbits) {
  active().accumulate_ones(counts, bits, nbits);
}

/// XOR-popcount restricted to the bit range [first_bit, last_bit) of two
/// equally sized packed arrays. Edge words are masked, interior words go
/// through the active kernel.
std::uint64_t xor_popcount_range(std::span<const std::uint64_t> a,
                                 std::span<const std::uint64_t> b,
                                 std::size_t first_bit, std::size_t last_bit);

}  // namespace pufkit::kernels
