#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pufkit/bitvec.hpp"
#include "pufkit/geometry.hpp"

namespace pufkit {

/// Identity of one power-up measurement. Measurement 0 is by convention the
/// enrollment reference.
struct TraceId {
  std::string device_id;
  std::string region_id;
  std::uint32_t measurement_index = 0;

  /// "dev0/mp3/m17" — the label used in CSV exports and file naming.
  std::string label() const;

  bool operator==(const TraceId&) const = default;
};

/// One power-up snapshot of a memory region. Immutable after construction;
/// the bit array length always equals geometry.accessible_bits().
class Trace {
 public:
  /// Throws pufkit::Error on empty ids or a bits/geometry length mismatch.
  Trace(TraceId id, RegionGeometry geometry, BitVector bits);

  const TraceId& id() const { return id_; }
  const RegionGeometry& geometry() const { return geometry_; }
  const BitVector& bits() const { return bits_; }

 private:
  TraceId id_;
  RegionGeometry geometry_;
  BitVector bits_;
};

/// All measurements of one (device, region) pair, ordered by measurement
/// index. The unit of enrollment.
class TraceSet {
 public:
  /// Validates that every trace shares device, region and geometry and that
  /// measurement indices are distinct; sorts by measurement index.
  static TraceSet from_traces(std::vector<Trace> traces);

  const std::string& device_id() const { return device_id_; }
  const std::string& region_id() const { return region_id_; }
  const RegionGeometry& geometry() const { return geometry_; }
  const std::vector<Trace>& traces() const { return traces_; }
  std::size_t size() const { return traces_.size(); }

  /// nullptr when the index is absent.
  const Trace* find(std::uint32_t measurement_index) const;

  bool has_enrollment_reference() const { return find(0) != nullptr; }

 private:
  TraceSet(std::string device_id, std::string region_id, RegionGeometry geometry,
           std::vector<Trace> traces);

  std::string device_id_;
  std::string region_id_;
  RegionGeometry geometry_;
  std::vector<Trace> traces_;
};

}  // namespace pufkit
