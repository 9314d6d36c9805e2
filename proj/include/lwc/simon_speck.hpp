#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lwc/words.hpp"

namespace lwc {

struct SimonParams {
  unsigned word_bits;
  unsigned key_words;
  unsigned rounds;
  unsigned z_index;
};

struct SpeckParams {
  unsigned word_bits;
  unsigned key_words;
  unsigned rounds;
  unsigned alpha;
  unsigned beta;
};

/// Published parameter tables, ordered by (block, key) size.
std::span<const SimonParams> simon_parameter_table() noexcept;
std::span<const SpeckParams> speck_parameter_table() noexcept;

/// Throws UnknownSpec when (block_bits, key_bits) is not a published set.
SimonParams simon_params(unsigned block_bits, unsigned key_bits);
SpeckParams speck_params(unsigned block_bits, unsigned key_bits);

/// The five 62-bit SIMON constant sequences; bit i of the sequence is
/// ((z_sequence(j) >> i) & 1).
std::uint64_t z_sequence(unsigned index);

/// f(x) = (rotl(x,1) & rotl(x,8)) ^ rotl(x,2).
Word simon_f(Word x);

/// (x, y) -> (y ^ f(x) ^ k, x). Throws WidthMismatch on unequal widths.
std::pair<Word, Word> simon_round(Word x, Word y, Word k);
std::pair<Word, Word> simon_inverse_round(Word x, Word y, Word k);

/// x' = (rotr(x, alpha) + y) ^ k; y' = rotl(y, beta) ^ x'.
std::pair<Word, Word> speck_round(Word x, Word y, Word k, unsigned alpha, unsigned beta);
std::pair<Word, Word> speck_inverse_round(Word x, Word y, Word k, unsigned alpha, unsigned beta);

/// Key bytes are big-endian; the last word_bits/8 bytes form key word 0.
/// Throws KeyLengthMismatch.
std::vector<std::uint64_t> simon_key_schedule(const SimonParams& p,
                                              std::span<const std::uint8_t> key);
std::vector<std::uint64_t> speck_key_schedule(const SpeckParams& p,
                                              std::span<const std::uint8_t> key);

/// Blocks are (x, y) with x the upper word.
uint128 simon_encrypt(const SimonParams& p, std::span<const std::uint64_t> round_keys,
                      uint128 block) noexcept;
uint128 simon_decrypt(const SimonParams& p, std::span<const std::uint64_t> round_keys,
                      uint128 block) noexcept;
uint128 speck_encrypt(const SpeckParams& p, std::span<const std::uint64_t> round_keys,
                      uint128 block) noexcept;
uint128 speck_decrypt(const SpeckParams& p, std::span<const std::uint64_t> round_keys,
                      uint128 block) noexcept;

}  // namespace lwc
