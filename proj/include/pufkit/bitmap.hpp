#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "pufkit/stats.hpp"

namespace pufkit {

/// Renders a window of per-cell ones fractions as a binary PPM (P6, maxval
/// 255), one pixel per bit, row-major from origin_bit. Color ramp:
///   f = 0          -> (0, 0, 0)            always 0
///   0 < f <= 0.5   -> (round(510 f), 0, 0)  black to pure red
///   0.5 < f < 1    -> (255, g, g), g = round(510 (f - 0.5))   red to white
///   f = 1          -> (255, 255, 255)       always 1
/// Throws pufkit::Error when the window exceeds the cell count.
std::vector<std::uint8_t> render_stability_bitmap(const CellStatistics& cs, std::size_t width,
                                                  std::size_t height, std::size_t origin_bit = 0);

void write_ppm_file(const std::vector<std::uint8_t>& ppm_bytes,
                    const std::filesystem::path& path);

}  // namespace pufkit
