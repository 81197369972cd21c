#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pufkit/trace.hpp"

namespace pufkit {

/// Optional narrowing of a directory scan.
struct TraceFilter {
  std::optional<std::string> device_id;
  std::optional<std::string> region_id;
  std::optional<std::uint32_t> measurement_index;

  bool matches(const TraceId& id) const;
};

/// Recursively loads every *.puft under dir (paths sorted, so the result is
/// deterministic), keeping traces the filter accepts. Throws pufkit::Error
/// when nothing matches.
std::vector<Trace> load_traces(const std::filesystem::path& dir,
                               const TraceFilter& filter = {});

/// Groups traces into TraceSets keyed by (device_id, region_id), ordered by
/// key. Throws pufkit::Error listing the offenders when geometries are mixed.
std::vector<TraceSet> group_into_sets(std::vector<Trace> traces);

/// The single TraceSet a directory resolves to; throws when the filtered
/// scan spans more than one (device, region) pair, naming the candidates.
TraceSet load_trace_set(const std::filesystem::path& dir, const TraceFilter& filter = {});

}  // namespace pufkit
