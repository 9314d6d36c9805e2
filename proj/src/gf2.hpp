// Small GF(2) linear algebra on bit vectors of at most 64 coordinates.
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace lwc::gf2 {

/// Row-echelon basis; each stored vector has a distinct leading bit.
class Basis {
 public:
  /// Returns false if v is already in the span.
  bool insert(std::uint64_t v) {
    for (auto b : vectors_) {
      if ((v ^ b) < v) v ^= b;
    }
    if (v == 0) return false;
    // Keep the basis fully reduced so lookups stay one pass.
    for (auto& b : vectors_) {
      if ((b ^ v) < b) b ^= v;
    }
    vectors_.push_back(v);
    return true;
  }

  std::size_t rank() const noexcept { return vectors_.size(); }
  const std::vector<std::uint64_t>& vectors() const noexcept { return vectors_; }

  /// Every element of offset + span, in Gray-code order.
  std::vector<std::uint64_t> affine_elements(std::uint64_t offset) const {
    std::vector<std::uint64_t> out;
    out.reserve(std::size_t{1} << rank());
    std::uint64_t v = offset;
    out.push_back(v);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << rank()); ++i) {
      v ^= vectors_[static_cast<std::size_t>(std::countr_zero(i))];
      out.push_back(v);
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> vectors_;
};

inline int parity(std::uint64_t v) { return std::popcount(v) & 1; }

/// Basis of {x : row . x = 0 for every row} over n coordinates.
inline std::vector<std::uint64_t> nullspace(const std::vector<std::uint64_t>& rows, unsigned n) {
  // Reduced row echelon form with pivots at the lowest set bit.
  std::vector<std::uint64_t> echelon;
  std::vector<unsigned> pivots;
  for (auto r : rows) {
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      if ((r >> pivots[i]) & 1U) r ^= echelon[i];
    }
    if (r == 0) continue;
    const unsigned p = static_cast<unsigned>(std::countr_zero(r));
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      if ((echelon[i] >> p) & 1U) echelon[i] ^= r;
    }
    echelon.push_back(r);
    pivots.push_back(p);
  }
  std::uint64_t pivot_mask = 0;
  for (auto p : pivots) pivot_mask |= std::uint64_t{1} << p;

  std::vector<std::uint64_t> out;
  for (unsigned f = 0; f < n; ++f) {
    if ((pivot_mask >> f) & 1U) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      if ((echelon[i] >> f) & 1U) v |= std::uint64_t{1} << pivots[i];
    }
    out.push_back(v);
  }
  return out;
}

/// One solution x of { mask_i . x = rhs_i }, or nullopt if inconsistent.
inline std::optional<std::uint64_t> solve(std::vector<std::uint64_t> masks, std::vector<int> rhs) {
  std::vector<std::uint64_t> echelon;
  std::vector<int> values;
  std::vector<unsigned> pivots;
  for (std::size_t k = 0; k < masks.size(); ++k) {
    std::uint64_t r = masks[k];
    int v = rhs[k];
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      if ((r >> pivots[i]) & 1U) {
        r ^= echelon[i];
        v ^= values[i];
      }
    }
    if (r == 0) {
      if (v != 0) return std::nullopt;
      continue;
    }
    const unsigned p = static_cast<unsigned>(std::countr_zero(r));
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      if ((echelon[i] >> p) & 1U) {
        echelon[i] ^= r;
        values[i] ^= v;
      }
    }
    echelon.push_back(r);
    values.push_back(v);
    pivots.push_back(p);
  }
  // Free variables are zero; each pivot variable equals its row value.
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < echelon.size(); ++i) {
    if (values[i]) x |= std::uint64_t{1} << pivots[i];
  }
  return x;
}

}  // namespace lwc::gf2
