#include "pufkit/trace_io.hpp"

#include <cstring>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "pufkit/errors.hpp"

namespace pufkit {

namespace {

constexpr char kMagic[4] = {'P', 'U', 'F', 'T'};
constexpr std::uint32_t kVersion = 1;

// Strings longer than this are rejected rather than allocated; real device
// and region ids are a few characters.
constexpr std::uint32_t kMaxIdLength = 4096;

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_string(std::string& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.append(s);
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint32_t u32() {
    if (pos_ + 4 > bytes_.size()) throw FormatError("truncated");
    pos_ += 4;
    return static_cast<std::uint32_t>(bytes_[pos_ - 4]) |
           static_cast<std::uint32_t>(bytes_[pos_ - 3]) << 8 |
           static_cast<std::uint32_t>(bytes_[pos_ - 2]) << 16 |
           static_cast<std::uint32_t>(bytes_[pos_ - 1]) << 24;
  }

  std::string str() {
    const std::uint32_t len = u32();
    if (len > kMaxIdLength) throw FormatError("corrupt header");
    if (pos_ + len > bytes_.size()) throw FormatError("truncated");
    std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), len);
    pos_ += len;
    return s;
  }

  std::span<const std::uint8_t> payload(std::size_t len) {
    if (pos_ + len > bytes_.size()) throw FormatError("truncated");
    auto s = bytes_.subspan(pos_, len);
    pos_ += len;
    return s;
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> write_trace(const Trace& t) {
  std::string out;
  out.append(kMagic, 4);
  put_u32(out, kVersion);
  put_string(out, t.id().device_id);
  put_string(out, t.id().region_id);
  put_u32(out, t.id().measurement_index);
  put_u32(out, t.geometry().total_bytes());
  put_u32(out, t.geometry().reserved_prefix_bytes());
  put_u32(out, t.geometry().forced_zero_bits());
  put_u32(out, t.geometry().accessible_bytes());
  const std::vector<std::uint8_t> payload = t.bits().to_bytes();
  out.append(reinterpret_cast<const char*>(payload.data()), payload.size());
  return {out.begin(), out.end()};
}

void write_trace(const Trace& t, std::ostream& out) {
  const std::vector<std::uint8_t> bytes = write_trace(t);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

Trace read_trace(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw FormatError("not a trace file");
  Reader r(bytes.subspan(4));

  const std::uint32_t version = r.u32();
  if (version != kVersion)
    throw FormatError("unsupported version " + std::to_string(version));

  std::string device_id = r.str();
  std::string region_id = r.str();
  const std::uint32_t measurement_index = r.u32();
  const std::uint32_t total_bytes = r.u32();
  const std::uint32_t reserved = r.u32();
  const std::uint32_t forced_zero = r.u32();
  const std::uint32_t payload_length = r.u32();

  if (device_id.empty() || region_id.empty()) throw FormatError("corrupt header");
  if (reserved >= total_bytes || payload_length != total_bytes - reserved)
    throw FormatError("corrupt header");
  RegionGeometry geometry = [&] {
    try {
      return RegionGeometry(total_bytes, reserved, forced_zero);
    } catch (const Error&) {
      throw FormatError("corrupt header");
    }
  }();

  const std::span<const std::uint8_t> payload = r.payload(payload_length);
  return Trace(TraceId{std::move(device_id), std::move(region_id), measurement_index},
               geometry, BitVector::from_bytes(payload));
}

Trace read_trace(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string s = buf.str();
  return read_trace(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

void write_trace_file(const Trace& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_trace(t, out);
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

Trace read_trace_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return read_trace(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Trace import_raw(std::span<const std::uint8_t> payload, TraceId id,
                 const RegionGeometry& geometry) {
  if (payload.size() != geometry.accessible_bytes())
    throw Error("length mismatch: expected " + std::to_string(geometry.accessible_bytes()) +
                " bytes, got " + std::to_string(payload.size()));
  return Trace(std::move(id), geometry, BitVector::from_bytes(payload));
}

}  // namespace pufkit
