#include "pufkit/bitvec.hpp"

#include "pufkit/kernels.hpp"

namespace pufkit {

BitVector BitVector::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
  BitVector v(nbits);
  const std::size_t usable_bytes = std::min(bytes.size(), (nbits + 7) / 8);
  for (std::size_t i = 0; i < usable_bytes; ++i)
    v.words_[i / 8] |= static_cast<std::uint64_t>(bytes[i]) << (8 * (i % 8));
  // Trim partial-byte tails so padding stays zero.
  if (nbits % 64 != 0 && !v.words_.empty())
    v.words_.back() &= ~std::uint64_t{0} >> (64 - nbits % 64);
  return v;
}

void BitVector::append(bool v) {
  if (nbits_ % 64 == 0) words_.push_back(0);
  ++nbits_;
  if (v) set(nbits_ - 1, true);
}

std::size_t BitVector::count_ones() const {
  return kernels::popcount_words(words_.data(), words_.size());
}

std::vector<std::uint8_t> BitVector::to_bytes() const {
  std::vector<std::uint8_t> out((nbits_ + 7) / 8, 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>(words_[i / 8] >> (8 * (i % 8)));
  return out;
}

}  // namespace pufkit
