#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "lwc/cipher.hpp"
#include "lwc/error.hpp"
#include "lwc/hex.hpp"
#include "lwc/present.hpp"
#include "lwc/simon_speck.hpp"
#include "reference_ciphers.hpp"

using namespace lwc;

namespace {

struct Vector {
  std::string spec;
  Bytes key, pt, ct;
};

std::vector<Vector> published_vectors() {
  std::ifstream in(LWC_DATA_DIR "/published_vectors.kat");
  REQUIRE(in.good());
  std::vector<Vector> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string fields[4];
    for (auto& f : fields) std::getline(ss, f, ',');
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      return s;
    };
    out.push_back({trim(fields[0]), parse_hex(fields[1]), parse_hex(fields[2]), parse_hex(fields[3])});
  }
  return out;
}

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(rng());
  return b;
}

uint128 random_block(std::mt19937_64& rng, unsigned width) {
  return ((uint128{rng()} << 64) | rng()) & block_mask(width);
}

}  // namespace

TEST_CASE("registry lists the published families") {
  const auto ids = registered_specs();
  CHECK(ids.size() >= 25);
  for (const char* id : {"present-64-80", "present-64-128", "simon-32-64", "simon-128-256",
                         "speck-32-64", "speck-128-256", "feistel-custom-xorrot",
                         "feistel-custom-sboxrot16", "feistel-custom-simon64"}) {
    CHECK(is_registered(id));
  }
}

TEST_CASE("make_cipher round-key counts") {
  CHECK(make_cipher("present-64-80", Bytes(10, 0)).round_keys().size() == 32);
  CHECK(make_cipher("present-64-128", Bytes(16, 0)).round_keys().size() == 32);
  CHECK(make_cipher("simon-64-128", Bytes(16, 0)).round_keys().size() == 44);
  CHECK(make_cipher("speck-64-128", Bytes(16, 0)).round_keys().size() == 27);
  CHECK(make_cipher("simon-128-256", Bytes(32, 0)).round_keys().size() == 72);
}

TEST_CASE("make_cipher errors") {
  CHECK_THROWS_AS(make_cipher("present-64-80", Bytes(5, 0)), KeyLengthMismatch);
  CHECK_THROWS_AS(make_cipher("present-64-96", Bytes(12, 0)), UnknownSpec);
  CHECK_THROWS_AS(make_cipher("simon-48-256", Bytes(32, 0)), UnknownSpec);
  const auto ctx = make_cipher("speck-64-128", Bytes(16, 0));
  CHECK_THROWS_AS(encrypt_block(ctx, Block(0, 128)), BlockWidthMismatch);
  CHECK_THROWS_AS(decrypt_block(ctx, Block(0, 32)), BlockWidthMismatch);
}

TEST_CASE("published vectors: library and reference implementations agree") {
  const auto vectors = published_vectors();
  CHECK(vectors.size() == 25);
  for (const auto& v : vectors) {
    CAPTURE(v.spec);
    const auto spec = lookup_spec(v.spec);
    const auto ctx = make_cipher(v.spec, v.key);
    const Block pt = block_from_bytes(v.pt, spec.block_bits);
    const Block ct = block_from_bytes(v.ct, spec.block_bits);
    CHECK(block_to_hex(encrypt_block(ctx, pt)) == block_to_hex(ct));
    CHECK(decrypt_block(ctx, ct) == pt);

    const unsigned half = spec.block_bits / 2;
    const reference::Words words{static_cast<std::uint64_t>(pt.bits() >> half),
                                 static_cast<std::uint64_t>(pt.bits() & block_mask(half))};
    uint128 ref = 0;
    switch (spec.family) {
      case Family::present:
        ref = reference::Present::encrypt(v.key, static_cast<std::uint64_t>(pt.bits()));
        break;
      case Family::simon: {
        const auto p = simon_params(spec.block_bits, spec.key_bits);
        const auto out = reference::simon_encrypt(half, p.rounds, static_cast<int>(p.z_index),
                                                  v.key, words);
        ref = (uint128{out.x} << half) | out.y;
        break;
      }
      case Family::speck: {
        const auto out = reference::speck_encrypt(half, spec.rounds, v.key, words);
        ref = (uint128{out.x} << half) | out.y;
        break;
      }
      case Family::feistel_custom:
        FAIL("no feistel vectors expected");
    }
    CHECK(ref == ct.bits());
  }
}

TEST_CASE("library matches reference implementations on random inputs") {
  std::mt19937_64 rng(2024);
  for (const auto& id : registered_specs()) {
    const auto spec = lookup_spec(id);
    if (spec.family == Family::feistel_custom) continue;
    CAPTURE(id);
    const unsigned half = spec.block_bits / 2;
    for (int i = 0; i < 50; ++i) {
      const Bytes key = random_bytes(rng, spec.key_bytes());
      const uint128 pt = random_block(rng, spec.block_bits);
      const auto ctx = make_cipher(id, key);
      const reference::Words words{static_cast<std::uint64_t>(pt >> half),
                                   static_cast<std::uint64_t>(pt & block_mask(half))};
      uint128 ref = 0;
      if (spec.family == Family::present) {
        ref = reference::Present::encrypt(key, static_cast<std::uint64_t>(pt));
      } else if (spec.family == Family::simon) {
        const auto p = simon_params(spec.block_bits, spec.key_bits);
        const auto out = reference::simon_encrypt(half, p.rounds, static_cast<int>(p.z_index), key, words);
        ref = (uint128{out.x} << half) | out.y;
      } else {
        const auto out = reference::speck_encrypt(half, spec.rounds, key, words);
        ref = (uint128{out.x} << half) | out.y;
      }
      CHECK(ctx.encrypt_bits(pt) == ref);
    }
  }
}

TEST_CASE("PRESENT S-box layer") {
  CHECK(present::sbox_layer(0) == 0xCCCCCCCCCCCCCCCCULL);
  CHECK(present::sbox_layer(~0ULL) == 0x2222222222222222ULL);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto x = rng();
    CHECK(present::inverse_sbox_layer(present::sbox_layer(x)) == x);
  }
  // Bijective on 4-bit values.
  std::array<bool, 16> seen{};
  for (auto v : present::kSbox) seen[v] = true;
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
}

TEST_CASE("PRESENT pLayer") {
  CHECK(present::player(1ULL) == 1ULL);
  CHECK(present::player(1ULL << 1) == (1ULL << 16));
  CHECK(present::player(1ULL << 63) == (1ULL << 63));
  std::array<bool, 64> hit{};
  for (unsigned i = 0; i < 64; ++i) {
    const auto out = present::player(1ULL << i);
    CHECK(std::popcount(out) == 1);
    hit[std::countr_zero(out)] = true;
    CHECK(present::inverse_player(out) == (1ULL << i));
  }
  CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
}

TEST_CASE("PRESENT key schedule") {
  std::mt19937_64 rng(5);
  for (std::size_t len : {10U, 16U}) {
    const Bytes key = random_bytes(rng, len);
    const auto rk = present::key_schedule(key);
    CHECK(rk.size() == 32);
    std::uint64_t leftmost = 0;
    for (int i = 0; i < 8; ++i) leftmost = (leftmost << 8) | key[i];
    CHECK(rk[0] == leftmost);
  }
  CHECK_THROWS_AS(present::key_schedule(Bytes(9, 0)), KeyLengthMismatch);
}

TEST_CASE("PRESENT rounds invert layer by layer") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t x = rng();
    const std::uint64_t k = rng();
    const std::uint64_t forward = present::player(present::sbox_layer(x ^ k));
    CHECK((present::inverse_sbox_layer(present::inverse_player(forward)) ^ k) == x);
  }
}

TEST_CASE("SIMON round function") {
  const Word zero(0, 16);
  CHECK(simon_round(zero, zero, zero) == std::pair{zero, zero});
  CHECK(simon_round(zero, zero, Word(0xBEEF, 16)) == std::pair{Word(0xBEEF, 16), zero});
  CHECK_THROWS_AS(simon_round(zero, Word(0, 32), zero), WidthMismatch);
  std::mt19937_64 rng(13);
  for (unsigned w : {16U, 24U, 32U, 48U, 64U}) {
    for (int i = 0; i < 1000; ++i) {
      const Word x(rng(), w), y(rng(), w), k(rng(), w);
      const auto [a, b] = simon_round(x, y, k);
      CHECK(simon_inverse_round(a, b, k) == std::pair{x, y});
    }
  }
}

TEST_CASE("SPECK round function") {
  const Word zero(0, 16);
  CHECK(speck_round(zero, zero, zero, 7, 2) == std::pair{zero, zero});
  const auto [x, y] = speck_round(zero, Word(1, 16), zero, 7, 2);
  CHECK(x == Word(1, 16));
  CHECK(y == Word(5, 16));
  CHECK_THROWS_AS(speck_round(zero, zero, Word(0, 24), 7, 2), WidthMismatch);
  std::mt19937_64 rng(17);
  for (unsigned w : {16U, 24U, 32U, 48U, 64U}) {
    const unsigned a = w == 16 ? 7 : 8, b = w == 16 ? 2 : 3;
    for (int i = 0; i < 2000; ++i) {
      const Word px(rng(), w), py(rng(), w), k(rng(), w);
      const auto [cx, cy] = speck_round(px, py, k, a, b);
      CHECK(speck_inverse_round(cx, cy, k, a, b) == std::pair{px, py});
    }
  }
}

TEST_CASE("SIMON / SPECK key schedules") {
  const Bytes key = parse_hex("1b1a1918 13121110 0b0a0908 03020100");
  const auto p = simon_params(64, 128);
  const auto rk = simon_key_schedule(p, key);
  CHECK(rk.size() == 44);
  // Base case: the first m round keys are the key words, k0 first.
  CHECK(rk[0] == 0x03020100);
  CHECK(rk[1] == 0x0b0a0908);
  CHECK(rk[2] == 0x13121110);
  CHECK(rk[3] == 0x1b1a1918);
  CHECK(simon_key_schedule(p, key) == rk);

  const auto sp = speck_params(64, 128);
  const auto srk = speck_key_schedule(sp, key);
  CHECK(srk.size() == 27);
  CHECK(srk[0] == 0x03020100);
  CHECK_THROWS_AS(speck_key_schedule(sp, Bytes(12, 0)), KeyLengthMismatch);
  CHECK_THROWS_AS(simon_key_schedule(p, Bytes(15, 0)), KeyLengthMismatch);
}

TEST_CASE("parameter tables") {
  CHECK(simon_parameter_table().size() == 10);
  CHECK(speck_parameter_table().size() == 10);
  CHECK(simon_params(64, 128).rounds == 44);
  CHECK(simon_params(32, 64).rounds == 32);
  CHECK(speck_params(32, 64).alpha == 7);
  CHECK(speck_params(128, 256).rounds == 34);
}

TEST_CASE("round trip, determinism and key sensitivity for every registered spec") {
  std::mt19937_64 rng(99);
  for (const auto& id : registered_specs()) {
    CAPTURE(id);
    const auto spec = lookup_spec(id);
    for (int i = 0; i < 200; ++i) {
      const Bytes key = random_bytes(rng, spec.key_bytes());
      const auto ctx = make_cipher(id, key);
      const Block pt(random_block(rng, spec.block_bits), spec.block_bits);
      const Block ct = encrypt_block(ctx, pt);
      CHECK(ct.bits() <= block_mask(spec.block_bits));
      CHECK(decrypt_block(ctx, ct) == pt);
      CHECK(encrypt_block(make_cipher(id, key), pt) == ct);

      Bytes flipped = key;
      const auto bit = rng() % (8 * key.size());
      flipped[bit / 8] ^= static_cast<std::uint8_t>(1U << (bit % 8));
      if (spec.block_bits >= 32) CHECK(encrypt_block(make_cipher(id, flipped), pt) != ct);
    }
  }
}
