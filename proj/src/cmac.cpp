#include "lwc/cmac.hpp"

#include "lwc/error.hpp"
#include "lwc/hex.hpp"

namespace lwc {

namespace {

uint128 reduction_constant(unsigned width) {
  switch (width) {
    case 64:
      return 0x1B;
    case 128:
      return 0x87;
    default:
      throw UnsupportedBlockWidth(width);
  }
}

uint128 load(std::span<const std::uint8_t> bytes) {
  uint128 v = 0;
  for (auto b : bytes) v = (v << 8) | b;
  return v;
}

}  // namespace

Block gf_double(const Block& v) {
  const unsigned w = v.width();
  const uint128 rb = reduction_constant(w);
  const bool carry = ((v.bits() >> (w - 1)) & 1U) != 0;
  return Block(((v.bits() << 1) & block_mask(w)) ^ (carry ? rb : 0), w);
}

std::pair<Block, Block> cmac_subkeys(const CipherContext& ctx) {
  const unsigned w = ctx.spec().block_bits;
  reduction_constant(w);
  const Block l(ctx.encrypt_bits(0), w);
  const Block k1 = gf_double(l);
  return {k1, gf_double(k1)};
}

MacContext::MacContext(CipherContext cipher)
    : cipher_(std::move(cipher)), k1_(0, 64), k2_(0, 64) {
  std::tie(k1_, k2_) = cmac_subkeys(cipher_);
}

Block cmac_tag(const MacContext& mac, std::span<const std::uint8_t> message) {
  const CipherContext& ctx = mac.cipher();
  const unsigned w = ctx.spec().block_bits;
  const std::size_t n = ctx.spec().block_bytes();

  // Every block but the last goes through plain CBC.
  const std::size_t full = message.empty() ? 0 : (message.size() - 1) / n;
  uint128 state = 0;
  for (std::size_t i = 0; i < full; ++i) state = ctx.encrypt_bits(state ^ load(message.subspan(i * n, n)));

  const auto tail = message.subspan(full * n);
  uint128 last;
  if (!message.empty() && tail.size() == n) {
    last = load(tail) ^ mac.k1().bits();
  } else {
    Bytes padded(tail.begin(), tail.end());
    padded.push_back(0x80);
    padded.resize(n, 0);
    last = load(padded) ^ mac.k2().bits();
  }
  return Block(ctx.encrypt_bits(state ^ last), w);
}

bool cmac_verify(const MacContext& mac, std::span<const std::uint8_t> message,
                 std::span<const std::uint8_t> tag) {
  const std::size_t n = mac.cipher().spec().block_bytes();
  if (tag.size() != n) throw InvalidTagLength(n, tag.size());
  const Bytes expected = block_to_bytes(cmac_tag(mac, message));
  std::uint8_t diff = 0;
  for (std::size_t i = 0; i < n; ++i) diff |= static_cast<std::uint8_t>(expected[i] ^ tag[i]);
  return diff == 0;
}

MemoryReport memory_report(const MacContext& mac) {
  const CipherContext& ctx = mac.cipher();
  const std::size_t block = ctx.spec().block_bytes();
  const std::size_t key_bytes = (ctx.round_key_bits() + 7) / 8;
  return MemoryReport{ctx.spec().id,
                      {{"round_keys", ctx.round_keys().size() * key_bytes},
                       {"k1", block},
                       {"k2", block},
                       {"chaining", block}}};
}

}  // namespace lwc
