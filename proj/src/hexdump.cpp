#include "pufkit/hexdump.hpp"

#include <cctype>
#include <cstdio>
#include <string>
#include <vector>

#include "pufkit/errors.hpp"

namespace pufkit {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits one line at whitespace, dropping everything from '#' on.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

}  // namespace

Trace parse_hexdump(std::string_view text, const HexdumpDialect& dialect, TraceId id,
                    const RegionGeometry& geometry) {
  std::vector<std::uint8_t> payload;
  payload.reserve(geometry.accessible_bytes());

  bool have_prev_offset = false;
  std::uint64_t prev_offset = 0;
  std::size_t prev_data_line = 0;  // bytes-per-line check needs one line of lookbehind
  std::size_t prev_line_bytes = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;

    const std::vector<Token> tokens = tokenize(line);
    std::size_t first_data = 0;

    if (!tokens.empty() && dialect.offset_prefix) {
      const Token& tok = tokens[0];
      if (tok.text.empty() || tok.text.back() != ':')
        throw ParseError("parse error at line " + std::to_string(line_no) + ", column " +
                             std::to_string(tok.column) + ": expected \"OFFSET:\" field",
                         line_no, tok.column);
      const std::string_view digits = tok.text.substr(0, tok.text.size() - 1);
      if (digits.empty())
        throw ParseError("parse error at line " + std::to_string(line_no) + ", column " +
                             std::to_string(tok.column) + ": empty offset",
                         line_no, tok.column);
      std::uint64_t offset = 0;
      for (char c : digits) {
        const int v = hex_value(c);
        if (v < 0)
          throw ParseError("parse error at line " + std::to_string(line_no) + ", column " +
                               std::to_string(tok.column) + ": bad offset \"" +
                               std::string(tok.text) + "\"",
                           line_no, tok.column);
        offset = offset * 16 + static_cast<std::uint64_t>(v);
      }
      if (have_prev_offset && offset <= prev_offset)
        throw Error("offset disorder at line " + std::to_string(line_no));
      prev_offset = offset;
      have_prev_offset = true;
      first_data = 1;
    }

    std::size_t line_bytes = 0;
    for (std::size_t t = first_data; t < tokens.size(); ++t) {
      const Token& tok = tokens[t];
      if (tok.text.size() != 2 || hex_value(tok.text[0]) < 0 || hex_value(tok.text[1]) < 0)
        throw ParseError("parse error at line " + std::to_string(line_no) + ", column " +
                             std::to_string(tok.column) + ": \"" + std::string(tok.text) +
                             "\" is not a hex byte",
                         line_no, tok.column);
      payload.push_back(
          static_cast<std::uint8_t>(hex_value(tok.text[0]) * 16 + hex_value(tok.text[1])));
      ++line_bytes;
    }

    if (line_bytes > 0) {
      // Only the final data line may fall short of the dialect width; that is
      // only known once the next data line shows up.
      if (dialect.bytes_per_line != 0 && prev_data_line != 0 &&
          prev_line_bytes != dialect.bytes_per_line)
        throw Error("length mismatch: line " + std::to_string(prev_data_line) + " holds " +
                    std::to_string(prev_line_bytes) + " bytes, dialect expects " +
                    std::to_string(dialect.bytes_per_line));
      if (dialect.bytes_per_line != 0 && line_bytes > dialect.bytes_per_line)
        throw Error("length mismatch: line " + std::to_string(line_no) + " holds " +
                    std::to_string(line_bytes) + " bytes, dialect expects " +
                    std::to_string(dialect.bytes_per_line));
      prev_data_line = line_no;
      prev_line_bytes = line_bytes;
    }

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (payload.size() != geometry.accessible_bytes())
    throw Error("length mismatch: expected " + std::to_string(geometry.accessible_bytes()) +
                " bytes, got " + std::to_string(payload.size()));

  return Trace(std::move(id), geometry, BitVector::from_bytes(payload));
}

std::string render_hexdump(const Trace& t, const HexdumpDialect& dialect) {
  const std::vector<std::uint8_t> payload = t.bits().to_bytes();
  const unsigned width = dialect.bytes_per_line == 0 ? 16 : dialect.bytes_per_line;

  std::string out;
  out.reserve(payload.size() * 3 + (payload.size() / width + 1) * 12);
  char buf[16];
  for (std::size_t i = 0; i < payload.size(); i += width) {
    if (dialect.offset_prefix) {
      std::snprintf(buf, sizeof buf, "%08zx:", i);
      out += buf;
    }
    const std::size_t end = std::min(payload.size(), i + width);
    for (std::size_t j = i; j < end; ++j) {
      std::snprintf(buf, sizeof buf, " %02x", payload[j]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace pufkit
