#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lwc/words.hpp"

namespace lwc {

using Bytes = std::vector<std::uint8_t>;

/// Parses big-endian hex. Case-insensitive; ASCII whitespace is ignored.
/// Throws InvalidArgument on odd digit count or non-hex characters.
Bytes parse_hex(std::string_view text);

/// Uppercase hex, two digits per byte.
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Big-endian conversions between byte strings and blocks. The byte count
/// must equal width / 8.
Block block_from_bytes(std::span<const std::uint8_t> bytes, unsigned width);
Bytes block_to_bytes(const Block& b);

Block block_from_hex(std::string_view text, unsigned width);
std::string block_to_hex(const Block& b);

}  // namespace lwc
