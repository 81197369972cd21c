#pragma once

#include <cstdint>
#include <vector>

#include "pufkit/trace.hpp"

namespace pufkit {

/// Per-cell ones counts over the measurements of one TraceSet; the empirical
/// estimate of each cell's power-up probability P1.
struct CellStatistics {
  std::vector<std::uint32_t> ones_count;
  std::uint32_t n_measurements = 0;

  std::size_t cell_count() const { return ones_count.size(); }

  double ones_fraction(std::size_t i) const {
    return static_cast<double>(ones_count[i]) / n_measurements;
  }
};

enum class CellClass : std::uint8_t { Stable0, Stable1, Unstable };

/// Exhaustive per-cell partition at tolerance t:
///   Stable1 iff ones_fraction >= 1-t, Stable0 iff <= t, else Unstable.
struct StabilityMap {
  std::vector<CellClass> class_per_bit;
  double tolerance = 0.0;

  std::size_t count(CellClass c) const;
};

/// Throws pufkit::Error("no measurements") on an empty set.
CellStatistics cell_statistics(const TraceSet& ts);

/// Throws pufkit::Error("ambiguous classification") unless 0 <= tolerance < 0.5.
StabilityMap classify_stability(const CellStatistics& cs, double tolerance);

}  // namespace pufkit
