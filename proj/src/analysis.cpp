#include "lwc/analysis.hpp"

#include <bit>
#include <cstdlib>
#include <random>

#include "lwc/error.hpp"
#include "lwc/hex.hpp"
#include "lwc/present.hpp"

namespace lwc {

namespace {

unsigned sbox_bits(std::span<const std::uint8_t> sbox) {
  const std::size_t size = sbox.size();
  if (size < 2 || size > 256 || !std::has_single_bit(size)) {
    throw InvalidArgument("S-box size must be a power of two in [2, 256]");
  }
  for (auto v : sbox) {
    if (v >= size) throw InvalidArgument("S-box entry out of range");
  }
  return static_cast<unsigned>(std::countr_zero(size));
}

bool is_bijective(std::span<const std::uint8_t> sbox) {
  std::vector<bool> seen(sbox.size(), false);
  for (auto v : sbox) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

int AnalysisTable::max_nontrivial() const {
  int best = 0;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (kind == TableKind::ddt ? a == 0 : (a == 0 && b == 0)) continue;
      best = std::max(best, std::abs(at(a, b)));
    }
  }
  return best;
}

AnalysisTable compute_ddt(std::span<const std::uint8_t> sbox) {
  const unsigned n = sbox_bits(sbox);
  const std::size_t size = sbox.size();
  AnalysisTable t{TableKind::ddt, n, is_bijective(sbox), std::vector<int>(size * size, 0)};
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t x = 0; x < size; ++x) ++t.entries[a * size + (sbox[x] ^ sbox[x ^ a])];
  }
  return t;
}

AnalysisTable compute_lat(std::span<const std::uint8_t> sbox) {
  const unsigned n = sbox_bits(sbox);
  const std::size_t size = sbox.size();
  AnalysisTable t{TableKind::lat, n, is_bijective(sbox), std::vector<int>(size * size, 0)};
  const int half = static_cast<int>(size / 2);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      int agree = 0;
      for (std::size_t x = 0; x < size; ++x) {
        if (std::popcount(a & x) % 2 == std::popcount(b & sbox[x]) % 2) ++agree;
      }
      t.entries[a * size + b] = agree - half;
    }
  }
  return t;
}

std::vector<std::uint8_t> sbox_by_name(std::string_view name_or_hex) {
  if (name_or_hex == "present") return {present::kSbox.begin(), present::kSbox.end()};
  if (name_or_hex.size() != 16) {
    throw InvalidArgument("S-box must be 'present' or 16 hex digits, got '" +
                          std::string(name_or_hex) + "'");
  }
  std::vector<std::uint8_t> out;
  for (char c : name_or_hex) {
    // Reuse the hex parser on a padded digit to get the same validation.
    out.push_back(parse_hex(std::string("0") + c).front());
  }
  return out;
}

AvalancheStats avalanche_test(const CipherContext& ctx, std::size_t trials, std::uint64_t seed) {
  if (trials < 100) throw InvalidArgument("avalanche_test needs at least 100 trials");
  const CipherSpec& spec = ctx.spec();
  const unsigned width = spec.block_bits;

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> flips(width, 0);
  std::uint64_t total = 0;
  Bytes key(spec.key_bytes());
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& b : key) b = static_cast<std::uint8_t>(rng());
    const auto keyed = make_cipher(spec.id, key);
    const uint128 hi = rng();
    const uint128 pt = ((hi << 64) | rng()) & block_mask(width);
    const unsigned bit = static_cast<unsigned>(rng() % width);
    const uint128 diff = keyed.encrypt_bits(pt) ^ keyed.encrypt_bits(pt ^ (uint128{1} << bit));
    total += static_cast<std::uint64_t>(popcount128(diff));
    for (unsigned i = 0; i < width; ++i) flips[i] += static_cast<std::uint64_t>((diff >> i) & 1U);
  }

  AvalancheStats stats{spec.id, trials, seed, 0.0, std::vector<double>(width, 0.0)};
  stats.mean_flip_ratio =
      static_cast<double>(total) / (static_cast<double>(trials) * static_cast<double>(width));
  for (unsigned i = 0; i < width; ++i) {
    stats.bit_flip_frequency[i] = static_cast<double>(flips[i]) / static_cast<double>(trials);
  }
  return stats;
}

}  // namespace lwc
