#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pufkit/bitvec.hpp"
#include "pufkit/geometry.hpp"
#include "pufkit/stats.hpp"
#include "pufkit/trace.hpp"

namespace pufkit {

enum class HashAlgorithm : std::uint32_t { Sha256 = 1 };

/// Parameters of the code-offset fuzzy extractor: a repetition-r code with
/// majority decode over deterministically selected stable cells.
struct FingerprintParams {
  std::uint32_t key_bits = 128;
  /// Repetition code length; must be odd so majority decode is unambiguous.
  std::uint32_t repetition = 11;
  /// Stability tolerance used when selecting cells at enrollment.
  double tolerance = 0.1;
  HashAlgorithm hash_algorithm = HashAlgorithm::Sha256;

  void validate() const;
};

/// Public error-correction material: which cells carry the codeword and the
/// XOR offset against the enrolled reference response. Reveals the key only
/// through that offset against the (secret) device response; the verifier is
/// a hash of the derived key, not of the response.
struct HelperData {
  FingerprintParams params;
  RegionGeometry geometry = RegionGeometry::gtx295();
  std::vector<std::uint32_t> selected_cells;
  BitVector code_offset;  // key_bits * repetition bits
  std::array<std::uint8_t, 32> verifier{};
};

struct EnrollResult {
  std::vector<std::uint8_t> key;  // ceil(key_bits/8) bytes, trailing bits zero
  HelperData helper;
};

/// Enrolls a device from repeated measurements: selects the first
/// key_bits * repetition stable cells (prefix excluded, index order), takes
/// the majority bit per cell as reference response, and publishes
/// codeword XOR response. The key is hash(raw key derived from key_seed)
/// truncated to key_bits. Requires >= 2 traces; throws pufkit::Error naming
/// the shortfall when too few cells classify as stable.
EnrollResult enroll(const TraceSet& ts, const FingerprintParams& params,
                    std::uint64_t key_seed);

/// Re-derives the key from a noisy re-measurement: selected bits XOR offset,
/// majority decode per r-block, hash, verify. nullopt when the verifier
/// rejects (too-noisy trace or wrong device). Throws pufkit::Error when the
/// trace does not match the helper geometry.
std::optional<std::vector<std::uint8_t>> reconstruct(const Trace& t, const HelperData& helper);

struct IdentificationDecision {
  double fractional_hd = 0.0;
  double threshold = 0.0;
  bool accept = false;
};

/// Threshold test on prefix-excluded fractional Hamming distance.
IdentificationDecision identify(const Trace& t, const Trace& reference,
                                double threshold = 0.25);

/// Helper-data file ("PUFH", version 1, little-endian). Errors mirror the
/// trace format: "not a helper file" / "unsupported version" / "truncated" /
/// "corrupt header".
void write_helper(const HelperData& h, std::ostream& out);
HelperData read_helper(std::istream& in);
void write_helper_file(const HelperData& h, const std::filesystem::path& path);
HelperData read_helper_file(const std::filesystem::path& path);

std::string to_hex(std::span<const std::uint8_t> bytes);

}  // namespace pufkit
