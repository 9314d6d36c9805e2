#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace lwc {

__extension__ typedef unsigned __int128 uint128;

/// All-ones mask of the given width (1..64).
constexpr std::uint64_t word_mask(unsigned width) noexcept {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

constexpr uint128 block_mask(unsigned width) noexcept {
  return width >= 128 ? ~uint128{0} : (uint128{1} << width) - 1;
}

constexpr int popcount128(uint128 v) noexcept {
  return std::popcount(static_cast<std::uint64_t>(v)) +
         std::popcount(static_cast<std::uint64_t>(v >> 64));
}

/// Rotations on raw values of an arbitrary width in [1, 64]; the count is
/// reduced mod width.
constexpr std::uint64_t rotl_bits(std::uint64_t v, unsigned r, unsigned width) noexcept {
  r %= width;
  if (r == 0) return v & word_mask(width);
  return ((v << r) | (v >> (width - r))) & word_mask(width);
}

constexpr std::uint64_t rotr_bits(std::uint64_t v, unsigned r, unsigned width) noexcept {
  r %= width;
  return rotl_bits(v, (width - r) % width, width);
}

/// Fixed-width unsigned word. The value is always reduced into [0, 2^width).
class Word {
 public:
  static constexpr unsigned kMaxWidth = 64;

  Word(std::uint64_t value, unsigned width);

  std::uint64_t value() const noexcept { return value_; }
  unsigned width() const noexcept { return width_; }

  friend bool operator==(const Word&, const Word&) = default;

  friend Word operator^(Word a, Word b);
  friend Word operator&(Word a, Word b);
  friend Word operator|(Word a, Word b);
  /// Wrapping addition mod 2^width.
  friend Word operator+(Word a, Word b);
  friend Word operator-(Word a, Word b);
  friend Word operator~(Word a) { return Word(~a.value_, a.width_); }

 private:
  std::uint64_t value_;
  unsigned width_;
};

Word rotl(Word w, unsigned r);
Word rotr(Word w, unsigned r);

/// Cipher state of 8..128 bits. Feistel-family blocks are two equal Words,
/// the upper half first.
class Block {
 public:
  static constexpr unsigned kMaxWidth = 128;

  Block(uint128 bits, unsigned width);
  static Block from_halves(Word upper, Word lower);

  uint128 bits() const noexcept { return bits_; }
  unsigned width() const noexcept { return width_; }

  Word upper() const;
  Word lower() const;

  bool bit(unsigned i) const noexcept { return (bits_ >> i) & 1U; }

  friend bool operator==(const Block&, const Block&) = default;
  friend Block operator^(Block a, Block b);

 private:
  uint128 bits_;
  unsigned width_;
};

int hamming_distance(const Block& a, const Block& b);

/// Moves input bit i to output bit table[i]. Throws NonBijectivePermutation
/// unless table is a bijection on [0, width).
Block permute_bits(const Block& b, std::span<const unsigned> table);

/// Inverse table of a bijection; throws NonBijectivePermutation otherwise.
std::vector<unsigned> invert_permutation(std::span<const unsigned> table);

}  // namespace lwc
