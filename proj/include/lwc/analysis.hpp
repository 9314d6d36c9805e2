#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lwc/cipher.hpp"

namespace lwc {

enum class TableKind { ddt, lat };

/// 2^n x 2^n integer table indexed [input][output].
///   DDT[a][b] = #{x : S(x) ^ S(x ^ a) = b}
///   LAT[a][b] = #{x : a.x = b.S(x)} - 2^(n-1)
struct AnalysisTable {
  TableKind kind;
  unsigned n;
  /// False when the S-box is not a permutation; the table is still exact.
  bool bijective;
  std::vector<int> entries;

  std::size_t size() const noexcept { return std::size_t{1} << n; }
  int at(std::size_t in, std::size_t out) const { return entries.at(in * size() + out); }

  /// Largest entry (absolute value for LAT) outside row 0 / cell (0,0).
  int max_nontrivial() const;
};

/// S-box of 2^n entries, n in [1, 8], each entry < 2^n. Throws InvalidArgument.
AnalysisTable compute_ddt(std::span<const std::uint8_t> sbox);
AnalysisTable compute_lat(std::span<const std::uint8_t> sbox);

/// "present" or 16 hex digits, one per 4-bit entry (e.g. "C56B90AD3EF84712").
std::vector<std::uint8_t> sbox_by_name(std::string_view name_or_hex);

struct AvalancheStats {
  std::string spec_id;
  std::size_t trials;
  std::uint64_t seed;
  double mean_flip_ratio;
  /// Frequency with which each ciphertext bit flipped; index 0 = LSB.
  std::vector<double> bit_flip_frequency;
};

/// Each trial draws a fresh key for ctx's spec and a random plaintext,
/// flips one random plaintext bit and records the ciphertext Hamming
/// distance over the block width. Deterministic for a fixed seed.
/// Throws InvalidArgument when trials < 100.
AvalancheStats avalanche_test(const CipherContext& ctx, std::size_t trials, std::uint64_t seed);

}  // namespace lwc
