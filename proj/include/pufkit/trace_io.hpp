#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "pufkit/trace.hpp"

namespace pufkit {

/// Canonical binary trace format, extension ".puft". Little-endian
/// throughout, bits packed LSB-first:
///
///   offset  size  field
///   0       4     magic "PUFT"
///   4       4     version (= 1)
///   8       4+n   device_id  (u32 length, then UTF-8 bytes)
///   ...     4+n   region_id  (u32 length, then UTF-8 bytes)
///   ...     4     measurement_index
///   ...     4     total_bytes
///   ...     4     reserved_prefix_bytes
///   ...     4     forced_zero_bits
///   ...     4     payload_length_bytes (= total_bytes - reserved_prefix_bytes)
///   ...     n     payload
void write_trace(const Trace& t, std::ostream& out);
std::vector<std::uint8_t> write_trace(const Trace& t);

/// Inverse of write_trace. Throws pufkit::FormatError: "not a trace file"
/// (bad magic), "unsupported version", "truncated" (short header or
/// payload), "corrupt header" (inconsistent lengths or geometry).
Trace read_trace(std::istream& in);
Trace read_trace(std::span<const std::uint8_t> bytes);

void write_trace_file(const Trace& t, const std::filesystem::path& path);
Trace read_trace_file(const std::filesystem::path& path);

/// Wraps a raw memory dump as a Trace. The payload must be exactly
/// geometry.accessible_bytes() long; the error message names both counts.
Trace import_raw(std::span<const std::uint8_t> payload, TraceId id,
                 const RegionGeometry& geometry);

}  // namespace pufkit
