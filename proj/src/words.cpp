#include "lwc/words.hpp"

#include <string>

#include "lwc/error.hpp"

namespace lwc {

namespace {

void require_same_width(const Word& a, const Word& b) {
  if (a.width() != b.width()) {
    throw WidthMismatch("WidthMismatch: " + std::to_string(a.width()) + " vs " +
                        std::to_string(b.width()) + " bits");
  }
}

}  // namespace

Word::Word(std::uint64_t value, unsigned width) : value_(value & word_mask(width)), width_(width) {
  if (width == 0 || width > kMaxWidth) {
    throw InvalidArgument("word width must be in [1, 64], got " + std::to_string(width));
  }
}

Word operator^(Word a, Word b) {
  require_same_width(a, b);
  return Word(a.value_ ^ b.value_, a.width_);
}

Word operator&(Word a, Word b) {
  require_same_width(a, b);
  return Word(a.value_ & b.value_, a.width_);
}

Word operator|(Word a, Word b) {
  require_same_width(a, b);
  return Word(a.value_ | b.value_, a.width_);
}

Word operator+(Word a, Word b) {
  require_same_width(a, b);
  return Word(a.value_ + b.value_, a.width_);
}

Word operator-(Word a, Word b) {
  require_same_width(a, b);
  return Word(a.value_ - b.value_, a.width_);
}

Word rotl(Word w, unsigned r) { return Word(rotl_bits(w.value(), r, w.width()), w.width()); }

Word rotr(Word w, unsigned r) { return Word(rotr_bits(w.value(), r, w.width()), w.width()); }

Block::Block(uint128 bits, unsigned width) : bits_(bits & block_mask(width)), width_(width) {
  if (width == 0 || width > kMaxWidth) {
    throw InvalidArgument("block width must be in [1, 128], got " + std::to_string(width));
  }
}

Block Block::from_halves(Word upper, Word lower) {
  require_same_width(upper, lower);
  const unsigned half = upper.width();
  return Block((uint128{upper.value()} << half) | lower.value(), 2 * half);
}

Word Block::upper() const {
  if (width_ % 2 != 0 || width_ / 2 > Word::kMaxWidth) {
    throw WidthMismatch("block of " + std::to_string(width_) + " bits has no word halves");
  }
  return Word(static_cast<std::uint64_t>(bits_ >> (width_ / 2)), width_ / 2);
}

Word Block::lower() const {
  if (width_ % 2 != 0 || width_ / 2 > Word::kMaxWidth) {
    throw WidthMismatch("block of " + std::to_string(width_) + " bits has no word halves");
  }
  return Word(static_cast<std::uint64_t>(bits_), width_ / 2);
}

Block operator^(Block a, Block b) {
  if (a.width_ != b.width_) throw BlockWidthMismatch(a.width_, b.width_);
  return Block(a.bits_ ^ b.bits_, a.width_);
}

int hamming_distance(const Block& a, const Block& b) { return popcount128((a ^ b).bits()); }

std::vector<unsigned> invert_permutation(std::span<const unsigned> table) {
  const auto n = table.size();
  std::vector<unsigned> inverse(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned target = table[i];
    if (target >= n) {
      throw NonBijectivePermutation("NonBijectivePermutation: target " + std::to_string(target) +
                                    " out of range");
    }
    if (seen[target]) {
      throw NonBijectivePermutation("NonBijectivePermutation: duplicate target " +
                                    std::to_string(target));
    }
    seen[target] = true;
    inverse[target] = static_cast<unsigned>(i);
  }
  return inverse;
}

Block permute_bits(const Block& b, std::span<const unsigned> table) {
  if (table.size() != b.width()) {
    throw NonBijectivePermutation("NonBijectivePermutation: table has " +
                                  std::to_string(table.size()) + " entries for a " +
                                  std::to_string(b.width()) + "-bit block");
  }
  invert_permutation(table);
  uint128 out = 0;
  for (unsigned i = 0; i < b.width(); ++i) {
    if (b.bit(i)) out |= uint128{1} << table[i];
  }
  return Block(out, b.width());
}

}  // namespace lwc
