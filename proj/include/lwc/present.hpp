#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace lwc::present {

inline constexpr unsigned kRounds = 31;
inline constexpr unsigned kRoundKeys = kRounds + 1;

inline constexpr std::array<std::uint8_t, 16> kSbox = {0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD,
                                                       0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2};

inline constexpr std::array<std::uint8_t, 16> kInverseSbox = [] {
  std::array<std::uint8_t, 16> inv{};
  for (std::uint8_t i = 0; i < 16; ++i) inv[kSbox[i]] = i;
  return inv;
}();

/// pLayer target of state bit i (bit 0 = least significant).
constexpr unsigned player_position(unsigned i) noexcept { return i == 63 ? 63 : (16 * i) % 63; }

std::uint64_t sbox_layer(std::uint64_t state) noexcept;
std::uint64_t inverse_sbox_layer(std::uint64_t state) noexcept;
std::uint64_t player(std::uint64_t state) noexcept;
std::uint64_t inverse_player(std::uint64_t state) noexcept;

/// Expands a 10-byte (80-bit) or 16-byte (128-bit) big-endian key into the
/// 32 round keys. Throws KeyLengthMismatch for other lengths.
std::vector<std::uint64_t> key_schedule(std::span<const std::uint8_t> key);

/// 31 rounds of addRoundKey, sBoxLayer, pLayer followed by a final key
/// addition. Requires 32 round keys.
std::uint64_t encrypt(std::span<const std::uint64_t> round_keys, std::uint64_t block) noexcept;
std::uint64_t decrypt(std::span<const std::uint64_t> round_keys, std::uint64_t block) noexcept;

}  // namespace lwc::present
