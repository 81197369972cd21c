#pragma once

#include <cstdint>
#include <span>

#include "pufkit/bitvec.hpp"
#include "pufkit/stats.hpp"
#include "pufkit/trace.hpp"

namespace pufkit {

enum class ExtractionMethod { VonNeumann, XorFold };

struct ExtractionConfig {
  ExtractionMethod method = ExtractionMethod::VonNeumann;
  /// XorFold only: number of unstable-cell bits XORed per output bit.
  std::uint32_t xor_fold_width = 8;

  void validate() const;
};

/// Extracts random bits from the cells the map classifies Unstable.
///
/// VonNeumann pairs consecutive traces per cell — (t0,t1), (t2,t3), ... —
/// and emits 1 for a (0,1) observation, 0 for (1,0), nothing when the pair
/// agrees; cells in index order, pairs in trace order within each cell.
/// Exact debiasing when power-ups are independent. Needs >= 2 traces.
///
/// XorFold XORs xor_fold_width unstable-cell bits per output bit within one
/// trace (traces processed in order, floor(cells/width) bits each); usable
/// with a single trace but only approximately unbiased.
///
/// Throws pufkit::Error("no entropy source") when no cell is Unstable.
BitVector extract(std::span<const Trace> traces, const StabilityMap& map,
                  const ExtractionConfig& cfg);

struct MonobitResult {
  double z_score = 0.0;
  bool pass = false;
};

/// z = (2*ones - n)/sqrt(n); pass iff |z| < 3.29 (alpha ~= 0.001).
/// Requires >= 100 bits.
MonobitResult monobit_test(const BitVector& bits);

struct SerialResult {
  double chi2 = 0.0;
  bool pass = false;
};

/// Good's serial test over overlapping 2-bit patterns:
///   X = 4/(n-1) * sum n_ij^2 - 2/n * sum n_i^2 + 1,
/// approximately chi-square with 2 df; pass iff X < 13.8155 (alpha = 0.001).
/// Requires >= 1000 bits.
SerialResult serial_test(const BitVector& bits);

}  // namespace pufkit
