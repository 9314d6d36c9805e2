#include "lwc/hex.hpp"

#include <cctype>

#include "lwc/error.hpp"

namespace lwc {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bytes parse_hex(std::string_view text) {
  Bytes out;
  out.reserve(text.size() / 2);
  int pending = -1;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    const int v = hex_value(c);
    if (v < 0) throw InvalidArgument(std::string("invalid hex character '") + c + "'");
    if (pending < 0) {
      pending = v;
    } else {
      out.push_back(static_cast<std::uint8_t>((pending << 4) | v));
      pending = -1;
    }
  }
  if (pending >= 0) throw InvalidArgument("hex string has an odd number of digits");
  return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

Block block_from_bytes(std::span<const std::uint8_t> bytes, unsigned width) {
  if (width % 8 != 0 || bytes.size() * 8 != width) {
    throw BlockWidthMismatch(width, static_cast<unsigned>(bytes.size() * 8));
  }
  uint128 v = 0;
  for (auto b : bytes) v = (v << 8) | b;
  return Block(v, width);
}

Bytes block_to_bytes(const Block& b) {
  Bytes out(b.width() / 8);
  uint128 v = b.bits();
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
  return out;
}

Block block_from_hex(std::string_view text, unsigned width) {
  return block_from_bytes(parse_hex(text), width);
}

std::string block_to_hex(const Block& b) { return to_hex(block_to_bytes(b)); }

}  // namespace lwc
