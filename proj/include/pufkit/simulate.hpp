#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pufkit/geometry.hpp"
#include "pufkit/trace.hpp"

namespace pufkit {

/// Mixture describing a population of SRAM cells: a fraction of cells pinned
/// near 0, a fraction pinned near 1, and the rest with power-up probability
/// scattered around 0.5.
///
/// Defaults are calibrated so that two power-ups of the same synthetic device
/// disagree on about 4.8% of bits while distinct devices disagree on ~50%,
/// matching the measured GTX 295 behaviour. The stable:unstable ratio of real
/// devices is not known; 0.46/0.46/0.08 is a calibration target, not a
/// measured fact.
struct CellMixtureParams {
  double stable0_weight = 0.46;
  double stable1_weight = 0.46;
  double unstable_weight = 0.08;
  /// A stable-0 cell still powers up as 1 with this probability (stable-1
  /// symmetric).
  double stable_flip_prob = 0.005;
  /// Unstable cells draw P1 uniformly from [0.5 - spread, 0.5 + spread].
  double unstable_spread = 0.15;

  /// Throws pufkit::Error unless weights are nonnegative and sum to 1
  /// (within 1e-9), 0 <= flip prob < 0.5, and 0 <= spread <= 0.5.
  void validate() const;
};

/// Synthetic device: one power-up probability per cell per region.
/// Regeneration from (device_id, seed, geometry, regions, params) is
/// bit-identical, and each region's probabilities depend only on the region
/// index, not on how many regions were requested.
class DeviceModel {
 public:
  const std::string& device_id() const { return device_id_; }
  std::uint64_t seed() const { return seed_; }
  const RegionGeometry& geometry() const { return geometry_; }
  std::size_t region_count() const { return p1_.size(); }

  /// Region ids are "mp0", "mp1", ...
  static std::string region_name(std::size_t index);

  /// -1 when no region of that name exists.
  std::ptrdiff_t region_index(std::string_view region_id) const;

  std::span<const double> p1_for_region(std::size_t index) const { return p1_[index]; }

 private:
  friend DeviceModel make_device(const std::string&, std::uint64_t, const RegionGeometry&,
                                 std::size_t, const CellMixtureParams&);

  std::string device_id_;
  std::uint64_t seed_ = 0;
  RegionGeometry geometry_ = RegionGeometry::gtx295();
  std::vector<std::vector<double>> p1_;
};

/// Assigns every cell a class by the mixture weights, then a power-up
/// probability; forced-zero prefix cells get P1 = 0 exactly.
/// Throws pufkit::Error for regions = 0 or invalid params.
DeviceModel make_device(const std::string& device_id, std::uint64_t seed,
                        const RegionGeometry& geometry, std::size_t regions,
                        const CellMixtureParams& params);

/// Samples one power-up snapshot: bit i ~ Bernoulli(P1[i]), independently,
/// deterministic in (device, region, measurement_index, noise_seed).
/// Throws pufkit::Error for an unknown region id.
Trace power_up(const DeviceModel& dm, std::string_view region_id,
               std::uint32_t measurement_index, std::uint64_t noise_seed);

}  // namespace pufkit
