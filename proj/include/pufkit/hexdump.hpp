#pragma once

#include <string>
#include <string_view>

#include "pufkit/trace.hpp"

namespace pufkit {

/// Shape of a serial-console hexdump. Lines hold whitespace-separated hex
/// byte pairs (either case), optionally preceded by a hex offset ending in
/// ':'. '#' starts a comment; blank lines are skipped.
struct HexdumpDialect {
  /// When true every data line must start with an "OFFSET:" field; offsets
  /// are checked for strictly increasing order but never used to place or
  /// zero-fill gaps.
  bool offset_prefix = true;
  /// Expected bytes per line; every line but the last must match exactly.
  /// 0 accepts any per-line count.
  unsigned bytes_per_line = 16;

  static HexdumpDialect canonical() { return {}; }
};

/// Concatenates the dumped bytes in line order into a Trace.
/// Throws pufkit::ParseError ("parse error at line L, column C") on non-hex
/// tokens, pufkit::Error "offset disorder" on non-increasing offsets and
/// "length mismatch" when the byte count differs from
/// geometry.accessible_bytes().
Trace parse_hexdump(std::string_view text, const HexdumpDialect& dialect, TraceId id,
                    const RegionGeometry& geometry);

/// Renders the exact textual form parse_hexdump accepts; ascending offsets,
/// lowercase hex. parse_hexdump(render_hexdump(t)) == t for every trace.
std::string render_hexdump(const Trace& t,
                           const HexdumpDialect& dialect = HexdumpDialect::canonical());

}  // namespace pufkit
