#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pufkit {

/// Fixed-length bit array packed into 64-bit words.
///
/// Bit numbering is LSB-first throughout: bit i lives in word i/64 at word
/// bit i%64, and when converting to/from bytes, bit i is bit i%8 of byte
/// i/8. Padding bits past size() are kept at zero so whole-word kernels can
/// run without tail masking.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t nbits) : nbits_(nbits), words_(word_count(nbits), 0) {}

  /// Unpacks bytes LSB-first. nbits may trim trailing bits of the last byte.
  static BitVector from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);
  static BitVector from_bytes(std::span<const std::uint8_t> bytes) {
    return from_bytes(bytes, bytes.size() * 8);
  }

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void append(bool v);

  std::span<const std::uint64_t> words() const { return words_; }

  std::size_t count_ones() const;

  /// Packs back to ceil(size()/8) bytes, LSB-first; trailing bits are zero.
  std::vector<std::uint8_t> to_bytes() const;

  bool operator==(const BitVector&) const = default;

  static std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pufkit
