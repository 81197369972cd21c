#pragma once

#include <cstdint>

namespace pufkit {

/// Physical layout of one readable SRAM region: total size, the leading
/// bytes that are not readable at all, and the leading accessible bits that
/// always read zero.
class RegionGeometry {
 public:
  /// Throws pufkit::Error unless reserved_prefix_bytes < total_bytes and
  /// forced_zero_bits fits inside the accessible payload.
  RegionGeometry(std::uint32_t total_bytes, std::uint32_t reserved_prefix_bytes,
                 std::uint32_t forced_zero_bits);

  /// The GTX 295 shared-memory region: 16 KiB per multiprocessor, first
  /// 24 bytes reserved for kernel parameters, first 64 accessible bits
  /// cleared on kernel launch.
  static RegionGeometry gtx295() { return {16384, 24, 64}; }

  std::uint32_t total_bytes() const { return total_bytes_; }
  std::uint32_t reserved_prefix_bytes() const { return reserved_prefix_bytes_; }
  std::uint32_t forced_zero_bits() const { return forced_zero_bits_; }

  std::uint32_t accessible_bytes() const { return total_bytes_ - reserved_prefix_bytes_; }
  std::uint64_t accessible_bits() const { return 8ull * accessible_bytes(); }

  bool operator==(const RegionGeometry&) const = default;

 private:
  std::uint32_t total_bytes_;
  std::uint32_t reserved_prefix_bytes_;
  std::uint32_t forced_zero_bits_;
};

inline std::uint64_t accessible_bits(const RegionGeometry& g) { return g.accessible_bits(); }

}  // namespace pufkit
