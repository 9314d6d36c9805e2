#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lwc/cipher.hpp"
#include "lwc/words.hpp"

namespace lwc {

/// F(input half, round key) -> word of the same width. Must be pure.
using RoundFunction = std::function<Word(Word input, Word round_key)>;
/// Master key bytes (big-endian) -> one round key per round.
using KeySchedule = std::function<std::vector<Word>(std::span<const std::uint8_t> key)>;

/// Balanced two-branch Feistel network. Round i maps (L, R) to
/// (R, L ^ F(R, k_i)); with final_swap the halves are exchanged once more
/// after the last round.
struct FeistelDef {
  std::string name;
  unsigned word_bits = 0;
  unsigned key_bits = 0;
  unsigned rounds = 0;
  RoundFunction round_function;
  KeySchedule schedule;
  bool final_swap = false;
  std::size_t table_bytes = 0;
};

/// Produces keyed contexts for a registered Feistel definition.
class FeistelFactory {
 public:
  explicit FeistelFactory(std::string spec_id) : spec_id_(std::move(spec_id)) {}

  const std::string& spec_id() const noexcept { return spec_id_; }
  CipherContext operator()(std::span<const std::uint8_t> key) const {
    return make_cipher(spec_id_, key);
  }

 private:
  std::string spec_id_;
};

/// Validates the definition and registers it as "feistel-custom-<name>".
/// Throws InvalidDefinition for zero rounds, bad widths, missing callbacks,
/// a schedule whose output shape disagrees with the round function, or a
/// name that is already registered.
FeistelFactory build_feistel(FeistelDef def);

inline constexpr const char* kFeistelPrefix = "feistel-custom-";

/// Example instantiations, registered at startup. None of them is intended
/// for production use.
namespace feistel_examples {

/// 64-bit block, 128-bit key, 32 rounds. F is GF(2)-linear (xor and
/// rotations of R ^ k only).
FeistelDef xor_rotate();

/// Toy 16-bit block, 32-bit key, 12 rounds.
/// F(x, k) = rotl(S(x ^ k), kToyRotation) with the PRESENT S-box applied to
/// both nibbles.
FeistelDef sbox_rotate16();
inline constexpr unsigned kToyRotation = 3;
std::uint8_t toy_sbox_byte(std::uint8_t x) noexcept;

/// SIMON-64/128 written as a kit instance: F(x, k) = f(x) ^ k with the
/// SIMON key schedule. Halves are ordered (y, x) relative to the native
/// block layout.
FeistelDef simon64();

}  // namespace feistel_examples

}  // namespace lwc
