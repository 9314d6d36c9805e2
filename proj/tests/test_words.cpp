#include <numeric>
#include <random>

#include "doctest.h"
#include "lwc/error.hpp"
#include "lwc/hex.hpp"
#include "lwc/words.hpp"

using namespace lwc;

TEST_CASE("rotl / rotr on 16-bit words") {
  CHECK(rotl(Word(0x0001, 16), 1) == Word(0x0002, 16));
  CHECK(rotl(Word(0x8000, 16), 1) == Word(0x0001, 16));
  CHECK(rotl(Word(0x1234, 16), 0) == Word(0x1234, 16));
  CHECK(rotr(Word(0x0001, 16), 1) == Word(0x8000, 16));
  CHECK(rotr(Word(0x0004, 16), 2) == Word(0x0001, 16));
}

TEST_CASE("rotation counts are reduced mod width") {
  CHECK(rotl(Word(0x0001, 16), 17) == Word(0x0002, 16));
  CHECK(rotr(Word(0x000001, 24), 24) == Word(0x000001, 24));
  CHECK(rotl(Word(0x800000000000, 48), 49) == Word(0x000000000001, 48));
}

TEST_CASE("rotations invert each other and preserve width (random)") {
  std::mt19937_64 rng(7);
  for (unsigned width : {16U, 24U, 32U, 48U, 64U}) {
    for (int i = 0; i < 2000; ++i) {
      const Word w(rng(), width);
      const unsigned r = static_cast<unsigned>(rng() % 200);
      const Word left = rotl(w, r);
      CHECK(rotr(left, r) == w);
      CHECK(left.value() <= word_mask(width));
      CHECK(left.width() == width);
      const Word sum = w + left;
      CHECK(sum.value() <= word_mask(width));
      CHECK((sum - left) == w);
    }
  }
}

TEST_CASE("word operations reject mismatched widths") {
  CHECK_THROWS_AS(Word(1, 16) ^ Word(1, 32), WidthMismatch);
  CHECK_THROWS_AS(Word(1, 16) + Word(1, 24), WidthMismatch);
  CHECK_THROWS_AS(Word(1, 0), InvalidArgument);
  CHECK_THROWS_AS(Word(1, 65), InvalidArgument);
}

TEST_CASE("block halves") {
  const Block b = Block::from_halves(Word(0x3b726574, 32), Word(0x7475432d, 32));
  CHECK(b.width() == 64);
  CHECK(b.bits() == uint128{0x3b7265747475432dULL});
  CHECK(b.upper() == Word(0x3b726574, 32));
  CHECK(b.lower() == Word(0x7475432d, 32));
  CHECK_THROWS_AS(Block(0, 48 + 1).upper(), WidthMismatch);
}

TEST_CASE("permute_bits") {
  SUBCASE("identity leaves the input unchanged") {
    std::vector<unsigned> id(64);
    std::iota(id.begin(), id.end(), 0U);
    const Block b(0x0123456789ABCDEFULL, 64);
    CHECK(permute_bits(b, id) == b);
  }
  SUBCASE("reversal on width 4") {
    const std::vector<unsigned> rev{3, 2, 1, 0};
    CHECK(permute_bits(Block(0b0001, 4), rev) == Block(0b1000, 4));
  }
  SUBCASE("permutation followed by its inverse") {
    std::mt19937_64 rng(11);
    std::vector<unsigned> p(128);
    std::iota(p.begin(), p.end(), 0U);
    std::shuffle(p.begin(), p.end(), rng);
    const auto inv = invert_permutation(p);
    for (int i = 0; i < 100; ++i) {
      const Block b((uint128{rng()} << 64) | rng(), 128);
      CHECK(permute_bits(permute_bits(b, p), inv) == b);
    }
  }
  SUBCASE("duplicate targets are rejected") {
    const std::vector<unsigned> dup{0, 1, 1, 3};
    CHECK_THROWS_AS(permute_bits(Block(1, 4), dup), NonBijectivePermutation);
    const std::vector<unsigned> out_of_range{0, 1, 2, 4};
    CHECK_THROWS_AS(permute_bits(Block(1, 4), out_of_range), NonBijectivePermutation);
  }
}

TEST_CASE("hex parsing") {
  CHECK(parse_hex("1b1A 19\t18") == Bytes{0x1b, 0x1a, 0x19, 0x18});
  CHECK(to_hex(Bytes{0xab, 0x01}) == "AB01");
  CHECK_THROWS_AS(parse_hex("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_hex("zz"), InvalidArgument);
  CHECK(block_to_hex(block_from_hex("5579c1387b228445", 64)) == "5579C1387B228445");
  CHECK_THROWS_AS(block_from_hex("5579c138", 64), BlockWidthMismatch);
}
