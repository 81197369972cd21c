#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pufkit/stats.hpp"
#include "pufkit/trace.hpp"

namespace pufkit {

/// One Hamming-distance comparison over a pair of traces.
struct HDReport {
  std::uint64_t compared_bits = 0;
  std::uint64_t distance = 0;
  bool excluded_prefix = true;

  double fractional() const {
    return compared_bits == 0 ? 0.0
                              : static_cast<double>(distance) / static_cast<double>(compared_bits);
  }
};

/// Symmetric matrix of pairwise fractional Hamming distances, zero diagonal.
struct HDMatrix {
  std::vector<TraceId> labels;
  std::vector<double> values;  // row-major n x n

  std::size_t size() const { return labels.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i * labels.size() + j]; }

  /// Header row of labels, then n numeric rows, 6 decimal places.
  std::string to_csv() const;
};

/// popcount(a XOR b) over the compared range; when exclude_prefix is set the
/// forced-zero prefix bits are left out of both the distance and the
/// denominator. Throws pufkit::Error on geometry/length mismatch.
HDReport hamming_distance(const Trace& a, const Trace& b, bool exclude_prefix = true);

/// One report per non-reference measurement against measurement 0, in index
/// order. Throws pufkit::Error("no enrollment reference") without
/// measurement 0, and requires at least 2 traces.
std::vector<std::pair<std::uint32_t, HDReport>> within_class(const TraceSet& ts,
                                                             bool exclude_prefix = true);

/// All unordered pairs. Pair computations run on a thread pool unless
/// PUFKIT_NO_PARALLEL=1 is set. Throws pufkit::Error on mixed geometries or
/// fewer than 2 traces.
HDMatrix between_class(std::span<const Trace> traces, bool exclude_prefix = true);

/// Mean ones_fraction over cells [skip_prefix_cells, n).
double bias(const CellStatistics& cs, std::size_t skip_prefix_cells = 0);

/// Mean over cells of -log2(max(f, 1-f)) with f clamped to
/// [1/(2n), 1 - 1/(2n)]. Requires n_measurements >= 2.
double min_entropy_per_bit(const CellStatistics& cs, std::size_t skip_prefix_cells = 0);

/// CSV for within-class reports: measurement_index, compared_bits, distance,
/// fractional (6 decimals).
std::string within_class_csv(std::span<const std::pair<std::uint32_t, HDReport>> reports);

}  // namespace pufkit
