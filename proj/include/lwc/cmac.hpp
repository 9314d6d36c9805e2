#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "lwc/cipher.hpp"
#include "lwc/memory.hpp"

namespace lwc {

/// Multiplication by x in GF(2^n) for n in {64, 128}:
/// (v << 1) ^ (msb(v) ? Rb : 0) with Rb = 0x1B (n = 64) or 0x87 (n = 128).
/// Throws UnsupportedBlockWidth.
Block gf_double(const Block& v);

/// K1 = double(E_K(0)), K2 = double(K1). Throws UnsupportedBlockWidth.
std::pair<Block, Block> cmac_subkeys(const CipherContext& ctx);

/// CMAC over a keyed cipher. Immutable after construction.
class MacContext {
 public:
  /// Throws UnsupportedBlockWidth for block widths other than 64 and 128.
  explicit MacContext(CipherContext cipher);

  const CipherContext& cipher() const noexcept { return cipher_; }
  const Block& k1() const noexcept { return k1_; }
  const Block& k2() const noexcept { return k2_; }

 private:
  CipherContext cipher_;
  Block k1_;
  Block k2_;
};

/// Tag of block width. Any message length, including empty.
Block cmac_tag(const MacContext& mac, std::span<const std::uint8_t> message);

/// Recomputes the tag and compares without an early exit.
/// Throws InvalidTagLength when tag is not exactly one block.
bool cmac_verify(const MacContext& mac, std::span<const std::uint8_t> message,
                 std::span<const std::uint8_t> tag);

/// Round keys, K1, K2 and the chaining block.
MemoryReport memory_report(const MacContext& mac);

}  // namespace lwc
