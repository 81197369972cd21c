#include <algorithm>

#include "pufkit/errors.hpp"
#include "pufkit/geometry.hpp"
#include "pufkit/kernels.hpp"
#include "pufkit/stats.hpp"
#include "pufkit/trace.hpp"

namespace pufkit {

RegionGeometry::RegionGeometry(std::uint32_t total_bytes, std::uint32_t reserved_prefix_bytes,
                               std::uint32_t forced_zero_bits)
    : total_bytes_(total_bytes),
      reserved_prefix_bytes_(reserved_prefix_bytes),
      forced_zero_bits_(forced_zero_bits) {
  if (reserved_prefix_bytes >= total_bytes)
    throw Error("invalid geometry: reserved prefix (" + std::to_string(reserved_prefix_bytes) +
                " bytes) must be smaller than the region (" + std::to_string(total_bytes) +
                " bytes)");
  if (forced_zero_bits > accessible_bits())
    throw Error("invalid geometry: " + std::to_string(forced_zero_bits) +
                " forced-zero bits exceed the " + std::to_string(accessible_bits()) +
                " accessible bits");
}

std::string TraceId::label() const {
  return device_id + "/" + region_id + "/m" + std::to_string(measurement_index);
}

Trace::Trace(TraceId id, RegionGeometry geometry, BitVector bits)
    : id_(std::move(id)), geometry_(geometry), bits_(std::move(bits)) {
  if (id_.device_id.empty() || id_.region_id.empty())
    throw Error("trace id requires non-empty device and region ids");
  if (bits_.size() != geometry_.accessible_bits())
    throw Error("trace length mismatch: geometry expects " +
                std::to_string(geometry_.accessible_bits()) + " bits, got " +
                std::to_string(bits_.size()));
}

TraceSet::TraceSet(std::string device_id, std::string region_id, RegionGeometry geometry,
                   std::vector<Trace> traces)
    : device_id_(std::move(device_id)),
      region_id_(std::move(region_id)),
      geometry_(geometry),
      traces_(std::move(traces)) {}

TraceSet TraceSet::from_traces(std::vector<Trace> traces) {
  if (traces.empty()) throw Error("no measurements");
  const TraceId& first = traces.front().id();
  const RegionGeometry geometry = traces.front().geometry();
  for (const Trace& t : traces) {
    if (t.id().device_id != first.device_id || t.id().region_id != first.region_id)
      throw Error("trace set mixes identities: " + first.label() + " vs " + t.id().label());
    if (!(t.geometry() == geometry))
      throw Error("trace set mixes geometries at " + t.id().label());
  }
  std::sort(traces.begin(), traces.end(), [](const Trace& a, const Trace& b) {
    return a.id().measurement_index < b.id().measurement_index;
  });
  for (std::size_t i = 1; i < traces.size(); ++i) {
    if (traces[i].id().measurement_index == traces[i - 1].id().measurement_index)
      throw Error("duplicate measurement index " +
                  std::to_string(traces[i].id().measurement_index) + " in trace set " +
                  first.device_id + "/" + first.region_id);
  }
  return TraceSet(first.device_id, first.region_id, geometry, std::move(traces));
}

const Trace* TraceSet::find(std::uint32_t measurement_index) const {
  for (const Trace& t : traces_)
    if (t.id().measurement_index == measurement_index) return &t;
  return nullptr;
}

std::size_t StabilityMap::count(CellClass c) const {
  return static_cast<std::size_t>(std::count(class_per_bit.begin(), class_per_bit.end(), c));
}

CellStatistics cell_statistics(const TraceSet& ts) {
  if (ts.size() == 0) throw Error("no measurements");
  CellStatistics cs;
  cs.n_measurements = static_cast<std::uint32_t>(ts.size());
  cs.ones_count.assign(ts.geometry().accessible_bits(), 0);
  for (const Trace& t : ts.traces()) {
    kernels::accumulate_ones(cs.ones_count.data(), t.bits().words().data(), t.bits().size());
  }
  return cs;
}

StabilityMap classify_stability(const CellStatistics& cs, double tolerance) {
  if (!(tolerance >= 0.0) || tolerance >= 0.5)
    throw Error("ambiguous classification: tolerance must lie in [0, 0.5), got " +
                std::to_string(tolerance));
  if (cs.n_measurements < 1) throw Error("no measurements");
  StabilityMap map;
  map.tolerance = tolerance;
  map.class_per_bit.resize(cs.cell_count());
  for (std::size_t i = 0; i < cs.cell_count(); ++i) {
    const double f = cs.ones_fraction(i);
    if (f >= 1.0 - tolerance)
      map.class_per_bit[i] = CellClass::Stable1;
    else if (f <= tolerance)
      map.class_per_bit[i] = CellClass::Stable0;
    else
      map.class_per_bit[i] = CellClass::Unstable;
  }
  return map;
}

}  // namespace pufkit
