#include "lwc/present.hpp"

#include "builtin.hpp"
#include "lwc/error.hpp"
#include "lwc/words.hpp"

namespace lwc::present {

namespace {

using ByteTable = std::array<std::uint8_t, 256>;
using SpreadTable = std::array<std::array<std::uint64_t, 256>, 8>;

constexpr ByteTable make_byte_sbox(const std::array<std::uint8_t, 16>& s) {
  ByteTable t{};
  for (unsigned b = 0; b < 256; ++b) {
    t[b] = static_cast<std::uint8_t>((s[b >> 4] << 4) | s[b & 0xF]);
  }
  return t;
}

// spread[k][v]: contribution of input byte k with value v after the permutation.
template <typename Position>
constexpr SpreadTable make_spread(Position position) {
  SpreadTable t{};
  for (unsigned k = 0; k < 8; ++k) {
    for (unsigned v = 0; v < 256; ++v) {
      std::uint64_t out = 0;
      for (unsigned j = 0; j < 8; ++j) {
        if ((v >> j) & 1U) out |= std::uint64_t{1} << position(8 * k + j);
      }
      t[k][v] = out;
    }
  }
  return t;
}

constexpr unsigned inverse_position(unsigned i) noexcept { return i == 63 ? 63 : (4 * i) % 63; }

constexpr ByteTable kByteSbox = make_byte_sbox(kSbox);
constexpr ByteTable kByteInverseSbox = make_byte_sbox(kInverseSbox);
const SpreadTable kPlayer = make_spread(player_position);
const SpreadTable kInversePlayer = make_spread(inverse_position);

std::uint64_t substitute(std::uint64_t state, const ByteTable& table) noexcept {
  std::uint64_t out = 0;
  for (unsigned k = 0; k < 8; ++k) {
    out |= std::uint64_t{table[(state >> (8 * k)) & 0xFF]} << (8 * k);
  }
  return out;
}

std::uint64_t spread(std::uint64_t state, const SpreadTable& table) noexcept {
  std::uint64_t out = 0;
  for (unsigned k = 0; k < 8; ++k) out |= table[k][(state >> (8 * k)) & 0xFF];
  return out;
}

class PresentEngine final : public detail::CipherEngine {
 public:
  explicit PresentEngine(std::span<const std::uint8_t> key) : round_keys_(key_schedule(key)) {}

  uint128 encrypt(uint128 block) const noexcept override {
    return present::encrypt(round_keys_, static_cast<std::uint64_t>(block));
  }
  uint128 decrypt(uint128 block) const noexcept override {
    return present::decrypt(round_keys_, static_cast<std::uint64_t>(block));
  }
  std::span<const std::uint64_t> round_keys() const noexcept override { return round_keys_; }
  unsigned round_key_bits() const noexcept override { return 64; }

 private:
  std::vector<std::uint64_t> round_keys_;
};

}  // namespace

std::uint64_t sbox_layer(std::uint64_t state) noexcept { return substitute(state, kByteSbox); }

std::uint64_t inverse_sbox_layer(std::uint64_t state) noexcept {
  return substitute(state, kByteInverseSbox);
}

std::uint64_t player(std::uint64_t state) noexcept { return spread(state, kPlayer); }

std::uint64_t inverse_player(std::uint64_t state) noexcept { return spread(state, kInversePlayer); }

std::vector<std::uint64_t> key_schedule(std::span<const std::uint8_t> key) {
  if (key.size() != 10 && key.size() != 16) throw KeyLengthMismatch(10, key.size());
  const unsigned width = static_cast<unsigned>(key.size() * 8);

  uint128 reg = 0;
  for (auto b : key) reg = (reg << 8) | b;
  const uint128 mask = block_mask(width);

  std::vector<std::uint64_t> keys;
  keys.reserve(kRoundKeys);
  for (unsigned counter = 1; counter <= kRoundKeys; ++counter) {
    keys.push_back(static_cast<std::uint64_t>(reg >> (width - 64)));
    if (counter == kRoundKeys) break;

    reg = ((reg << 61) | (reg >> (width - 61))) & mask;
    if (width == 80) {
      const unsigned top = static_cast<unsigned>(reg >> 76) & 0xF;
      reg = (reg & ~(uint128{0xF} << 76)) | (uint128{kSbox[top]} << 76);
      reg ^= uint128{counter} << 15;
    } else {
      const unsigned top = static_cast<unsigned>(reg >> 120) & 0xFF;
      const unsigned sub = (kSbox[top >> 4] << 4) | kSbox[top & 0xF];
      reg = (reg & ~(uint128{0xFF} << 120)) | (uint128{sub} << 120);
      reg ^= uint128{counter} << 62;
    }
  }
  return keys;
}

std::uint64_t encrypt(std::span<const std::uint64_t> round_keys, std::uint64_t block) noexcept {
  for (unsigned r = 0; r < kRounds; ++r) {
    block = player(sbox_layer(block ^ round_keys[r]));
  }
  return block ^ round_keys[kRounds];
}

std::uint64_t decrypt(std::span<const std::uint64_t> round_keys, std::uint64_t block) noexcept {
  block ^= round_keys[kRounds];
  for (unsigned r = kRounds; r-- > 0;) {
    block = inverse_sbox_layer(inverse_player(block)) ^ round_keys[r];
  }
  return block;
}

}  // namespace lwc::present

namespace lwc::detail {

std::vector<RegistryEntry> present_entries() {
  std::vector<RegistryEntry> out;
  for (unsigned key_bits : {80U, 128U}) {
    CipherSpec spec{"present-64-" + std::to_string(key_bits),
                    Family::present,
                    64,
                    key_bits,
                    present::kRounds,
                    PresentConstants{present::kSbox}};
    out.push_back({std::move(spec), [](std::span<const std::uint8_t> key) {
                     return std::make_shared<const present::PresentEngine>(key);
                   }});
  }
  return out;
}

}  // namespace lwc::detail
