#include "pufkit/simulate.hpp"

#include <cmath>
#include <cstdio>

#include "pufkit/errors.hpp"
#include "pufkit/rng.hpp"

namespace pufkit {

namespace {

// Purpose tags keep the cell-probability stream and the power-up noise
// streams disjoint even for coinciding numeric inputs.
constexpr std::uint64_t kDeviceStreamTag = fnv1a64("pufkit.device");
constexpr std::uint64_t kPowerUpStreamTag = fnv1a64("pufkit.powerup");

std::uint64_t device_stream_seed(const std::string& device_id, std::uint64_t seed,
                                 std::uint64_t region_index) {
  std::uint64_t h = absorb(kDeviceStreamTag, fnv1a64(device_id));
  h = absorb(h, seed);
  return absorb(h, region_index);
}

std::uint64_t powerup_stream_seed(const std::string& device_id, std::uint64_t seed,
                                  std::uint64_t region_index, std::uint32_t measurement_index,
                                  std::uint64_t noise_seed) {
  std::uint64_t h = absorb(kPowerUpStreamTag, fnv1a64(device_id));
  h = absorb(h, seed);
  h = absorb(h, region_index);
  h = absorb(h, measurement_index);
  return absorb(h, noise_seed);
}

}  // namespace

void CellMixtureParams::validate() const {
  if (stable0_weight < 0.0 || stable1_weight < 0.0 || unstable_weight < 0.0)
    throw Error("mixture weights must be nonnegative");
  const double sum = stable0_weight + stable1_weight + unstable_weight;
  if (std::abs(sum - 1.0) > 1e-9)
    throw Error("mixture weights must sum to 1, got " + std::to_string(sum));
  if (!(stable_flip_prob >= 0.0) || stable_flip_prob >= 0.5)
    throw Error("stable flip probability must lie in [0, 0.5)");
  if (!(unstable_spread >= 0.0) || unstable_spread > 0.5)
    throw Error("unstable spread must lie in [0, 0.5]");
}

std::string DeviceModel::region_name(std::size_t index) {
  return "mp" + std::to_string(index);
}

std::ptrdiff_t DeviceModel::region_index(std::string_view region_id) const {
  for (std::size_t r = 0; r < p1_.size(); ++r)
    if (region_name(r) == region_id) return static_cast<std::ptrdiff_t>(r);
  return -1;
}

DeviceModel make_device(const std::string& device_id, std::uint64_t seed,
                        const RegionGeometry& geometry, std::size_t regions,
                        const CellMixtureParams& params) {
  params.validate();
  if (device_id.empty()) throw Error("device id must be non-empty");
  if (regions == 0) throw Error("device needs at least one region");

  DeviceModel dm;
  dm.device_id_ = device_id;
  dm.seed_ = seed;
  dm.geometry_ = geometry;
  dm.p1_.resize(regions);

  const std::uint64_t nbits = geometry.accessible_bits();
  const std::uint32_t zero_prefix = geometry.forced_zero_bits();
  for (std::size_t r = 0; r < regions; ++r) {
    SplitMix64 rng(device_stream_seed(device_id, seed, r));
    std::vector<double>& p1 = dm.p1_[r];
    p1.resize(nbits);
    for (std::uint64_t i = 0; i < nbits; ++i) {
      // Consume two draws per cell regardless of class so the stream layout
      // is independent of the parameters.
      const double class_draw = rng.next_unit();
      const double value_draw = rng.next_unit();
      double p;
      if (class_draw < params.stable0_weight) {
        p = params.stable_flip_prob;
      } else if (class_draw < params.stable0_weight + params.stable1_weight) {
        p = 1.0 - params.stable_flip_prob;
      } else {
        p = 0.5 - params.unstable_spread + 2.0 * params.unstable_spread * value_draw;
      }
      p1[i] = (i < zero_prefix) ? 0.0 : p;
    }
  }
  return dm;
}

Trace power_up(const DeviceModel& dm, std::string_view region_id,
               std::uint32_t measurement_index, std::uint64_t noise_seed) {
  const std::ptrdiff_t r = dm.region_index(region_id);
  if (r < 0)
    throw Error("unknown region \"" + std::string(region_id) + "\" on device " +
                dm.device_id());

  const std::span<const double> p1 = dm.p1_for_region(static_cast<std::size_t>(r));
  SplitMix64 rng(powerup_stream_seed(dm.device_id(), dm.seed(), static_cast<std::uint64_t>(r),
                                     measurement_index, noise_seed));
  BitVector bits(p1.size());
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (rng.next_bernoulli(p1[i])) bits.set(i, true);
  }
  return Trace(TraceId{dm.device_id(), std::string(region_id), measurement_index},
               dm.geometry(), std::move(bits));
}

}  // namespace pufkit
