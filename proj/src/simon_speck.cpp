#include "lwc/simon_speck.hpp"

#include <array>
#include <string>
#include <string_view>

#include "builtin.hpp"
#include "lwc/error.hpp"

namespace lwc {

namespace {

constexpr std::array<SimonParams, 10> kSimonTable{{
    {16, 4, 32, 0},
    {24, 3, 36, 0},
    {24, 4, 36, 1},
    {32, 3, 42, 2},
    {32, 4, 44, 3},
    {48, 2, 52, 2},
    {48, 3, 54, 3},
    {64, 2, 68, 2},
    {64, 3, 69, 3},
    {64, 4, 72, 4},
}};

constexpr std::array<SpeckParams, 10> kSpeckTable{{
    {16, 4, 22, 7, 2},
    {24, 3, 22, 8, 3},
    {24, 4, 23, 8, 3},
    {32, 3, 26, 8, 3},
    {32, 4, 27, 8, 3},
    {48, 2, 28, 8, 3},
    {48, 3, 29, 8, 3},
    {64, 2, 32, 8, 3},
    {64, 3, 33, 8, 3},
    {64, 4, 34, 8, 3},
}};

constexpr std::uint64_t pack_sequence(std::string_view bits) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') v |= std::uint64_t{1} << i;
  }
  return v;
}

// Written first bit first, as in the published design document.
constexpr std::array<std::uint64_t, 5> kZ{
    pack_sequence("11111010001001010110000111001101111101000100101011000011100110"),
    pack_sequence("10001110111110010011000010110101000111011111001001100001011010"),
    pack_sequence("10101111011100000011010010011000101000010001111110010110110011"),
    pack_sequence("11011011101011000110010111100000010010001010011100110100001111"),
    pack_sequence("11010001111001101011011000100000010111000011001010010011101111"),
};

inline std::uint64_t f_raw(std::uint64_t x, unsigned w) noexcept {
  return (rotl_bits(x, 1, w) & rotl_bits(x, 8, w)) ^ rotl_bits(x, 2, w);
}

std::vector<std::uint64_t> key_words(std::span<const std::uint8_t> key, unsigned word_bits,
                                     unsigned count) {
  const std::size_t word_bytes = word_bits / 8;
  if (key.size() != word_bytes * count) throw KeyLengthMismatch(word_bytes * count, key.size());
  std::vector<std::uint64_t> words(count, 0);
  for (unsigned i = 0; i < count; ++i) {
    // Word i sits i words from the end of the big-endian byte string.
    const std::size_t start = key.size() - (i + 1) * word_bytes;
    for (std::size_t b = 0; b < word_bytes; ++b) words[i] = (words[i] << 8) | key[start + b];
  }
  return words;
}

void require_same_width(const Word& a, const Word& b, const Word& c) {
  if (a.width() != b.width() || a.width() != c.width()) {
    throw WidthMismatch("WidthMismatch: round inputs must share one width");
  }
}

class SimonEngine final : public detail::CipherEngine {
 public:
  SimonEngine(SimonParams p, std::span<const std::uint8_t> key)
      : params_(p), round_keys_(simon_key_schedule(p, key)) {}

  uint128 encrypt(uint128 block) const noexcept override {
    return simon_encrypt(params_, round_keys_, block);
  }
  uint128 decrypt(uint128 block) const noexcept override {
    return simon_decrypt(params_, round_keys_, block);
  }
  std::span<const std::uint64_t> round_keys() const noexcept override { return round_keys_; }
  unsigned round_key_bits() const noexcept override { return params_.word_bits; }

 private:
  SimonParams params_;
  std::vector<std::uint64_t> round_keys_;
};

class SpeckEngine final : public detail::CipherEngine {
 public:
  SpeckEngine(SpeckParams p, std::span<const std::uint8_t> key)
      : params_(p), round_keys_(speck_key_schedule(p, key)) {}

  uint128 encrypt(uint128 block) const noexcept override {
    return speck_encrypt(params_, round_keys_, block);
  }
  uint128 decrypt(uint128 block) const noexcept override {
    return speck_decrypt(params_, round_keys_, block);
  }
  std::span<const std::uint64_t> round_keys() const noexcept override { return round_keys_; }
  unsigned round_key_bits() const noexcept override { return params_.word_bits; }

 private:
  SpeckParams params_;
  std::vector<std::uint64_t> round_keys_;
};

}  // namespace

std::span<const SimonParams> simon_parameter_table() noexcept { return kSimonTable; }
std::span<const SpeckParams> speck_parameter_table() noexcept { return kSpeckTable; }

SimonParams simon_params(unsigned block_bits, unsigned key_bits) {
  for (const auto& p : kSimonTable) {
    if (2 * p.word_bits == block_bits && p.key_words * p.word_bits == key_bits) return p;
  }
  throw UnknownSpec("simon-" + std::to_string(block_bits) + "-" + std::to_string(key_bits));
}

SpeckParams speck_params(unsigned block_bits, unsigned key_bits) {
  for (const auto& p : kSpeckTable) {
    if (2 * p.word_bits == block_bits && p.key_words * p.word_bits == key_bits) return p;
  }
  throw UnknownSpec("speck-" + std::to_string(block_bits) + "-" + std::to_string(key_bits));
}

std::uint64_t z_sequence(unsigned index) {
  if (index >= kZ.size()) throw InvalidArgument("z-sequence index out of range");
  return kZ[index];
}

Word simon_f(Word x) { return (rotl(x, 1) & rotl(x, 8)) ^ rotl(x, 2); }

std::pair<Word, Word> simon_round(Word x, Word y, Word k) {
  require_same_width(x, y, k);
  return {y ^ simon_f(x) ^ k, x};
}

std::pair<Word, Word> simon_inverse_round(Word x, Word y, Word k) {
  require_same_width(x, y, k);
  return {y, x ^ simon_f(y) ^ k};
}

std::pair<Word, Word> speck_round(Word x, Word y, Word k, unsigned alpha, unsigned beta) {
  require_same_width(x, y, k);
  const Word nx = (rotr(x, alpha) + y) ^ k;
  return {nx, rotl(y, beta) ^ nx};
}

std::pair<Word, Word> speck_inverse_round(Word x, Word y, Word k, unsigned alpha, unsigned beta) {
  require_same_width(x, y, k);
  const Word py = rotr(y ^ x, beta);
  return {rotl((x ^ k) - py, alpha), py};
}

std::vector<std::uint64_t> simon_key_schedule(const SimonParams& p,
                                              std::span<const std::uint8_t> key) {
  const unsigned w = p.word_bits;
  const unsigned m = p.key_words;
  const std::uint64_t mask = word_mask(w);
  const std::uint64_t z = kZ.at(p.z_index);

  std::vector<std::uint64_t> k = key_words(key, w, m);
  k.resize(p.rounds);
  for (unsigned i = m; i < p.rounds; ++i) {
    std::uint64_t tmp = rotr_bits(k[i - 1], 3, w);
    if (m == 4) tmp ^= k[i - 3];
    tmp ^= rotr_bits(tmp, 1, w);
    const std::uint64_t z_bit = (z >> ((i - m) % 62)) & 1U;
    k[i] = (~k[i - m] ^ tmp ^ z_bit ^ 3U) & mask;
  }
  return k;
}

std::vector<std::uint64_t> speck_key_schedule(const SpeckParams& p,
                                              std::span<const std::uint8_t> key) {
  const unsigned w = p.word_bits;
  const unsigned m = p.key_words;
  const std::uint64_t mask = word_mask(w);

  const std::vector<std::uint64_t> words = key_words(key, w, m);
  std::vector<std::uint64_t> l(words.begin() + 1, words.end());
  l.reserve(p.rounds + m);
  std::vector<std::uint64_t> k(p.rounds);
  k[0] = words[0];
  for (unsigned i = 0; i + 1 < p.rounds; ++i) {
    l.push_back(((k[i] + rotr_bits(l[i], p.alpha, w)) & mask) ^ i);
    k[i + 1] = rotl_bits(k[i], p.beta, w) ^ l.back();
  }
  return k;
}

uint128 simon_encrypt(const SimonParams& p, std::span<const std::uint64_t> round_keys,
                      uint128 block) noexcept {
  const unsigned w = p.word_bits;
  std::uint64_t x = static_cast<std::uint64_t>(block >> w);
  std::uint64_t y = static_cast<std::uint64_t>(block) & word_mask(w);
  for (unsigned i = 0; i < p.rounds; ++i) {
    const std::uint64_t t = x;
    x = y ^ f_raw(x, w) ^ round_keys[i];
    y = t;
  }
  return (uint128{x} << w) | y;
}

uint128 simon_decrypt(const SimonParams& p, std::span<const std::uint64_t> round_keys,
                      uint128 block) noexcept {
  const unsigned w = p.word_bits;
  std::uint64_t x = static_cast<std::uint64_t>(block >> w);
  std::uint64_t y = static_cast<std::uint64_t>(block) & word_mask(w);
  for (unsigned i = p.rounds; i-- > 0;) {
    const std::uint64_t t = y;
    y = x ^ f_raw(y, w) ^ round_keys[i];
    x = t;
  }
  return (uint128{x} << w) | y;
}

uint128 speck_encrypt(const SpeckParams& p, std::span<const std::uint64_t> round_keys,
                      uint128 block) noexcept {
  const unsigned w = p.word_bits;
  const std::uint64_t mask = word_mask(w);
  std::uint64_t x = static_cast<std::uint64_t>(block >> w);
  std::uint64_t y = static_cast<std::uint64_t>(block) & mask;
  for (unsigned i = 0; i < p.rounds; ++i) {
    x = ((rotr_bits(x, p.alpha, w) + y) & mask) ^ round_keys[i];
    y = rotl_bits(y, p.beta, w) ^ x;
  }
  return (uint128{x} << w) | y;
}

uint128 speck_decrypt(const SpeckParams& p, std::span<const std::uint64_t> round_keys,
                      uint128 block) noexcept {
  const unsigned w = p.word_bits;
  const std::uint64_t mask = word_mask(w);
  std::uint64_t x = static_cast<std::uint64_t>(block >> w);
  std::uint64_t y = static_cast<std::uint64_t>(block) & mask;
  for (unsigned i = p.rounds; i-- > 0;) {
    y = rotr_bits(y ^ x, p.beta, w);
    x = rotl_bits(((x ^ round_keys[i]) - y) & mask, p.alpha, w);
  }
  return (uint128{x} << w) | y;
}

}  // namespace lwc

namespace lwc::detail {

std::vector<RegistryEntry> simon_speck_entries() {
  std::vector<RegistryEntry> out;
  for (const auto& p : kSimonTable) {
    const unsigned block = 2 * p.word_bits;
    const unsigned key = p.key_words * p.word_bits;
    CipherSpec spec{"simon-" + std::to_string(block) + "-" + std::to_string(key),
                    Family::simon,
                    block,
                    key,
                    p.rounds,
                    SimonConstants{p.word_bits, p.key_words, p.z_index}};
    out.push_back({std::move(spec), [p](std::span<const std::uint8_t> k) {
                     return std::make_shared<const SimonEngine>(p, k);
                   }});
  }
  for (const auto& p : kSpeckTable) {
    const unsigned block = 2 * p.word_bits;
    const unsigned key = p.key_words * p.word_bits;
    CipherSpec spec{"speck-" + std::to_string(block) + "-" + std::to_string(key),
                    Family::speck,
                    block,
                    key,
                    p.rounds,
                    SpeckConstants{p.word_bits, p.key_words, p.alpha, p.beta}};
    out.push_back({std::move(spec), [p](std::span<const std::uint8_t> k) {
                     return std::make_shared<const SpeckEngine>(p, k);
                   }});
  }
  return out;
}

}  // namespace lwc::detail
