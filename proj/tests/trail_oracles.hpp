// Brute-force counterparts of the trail-search models. Everything here is
// computed by evaluating the round function on all inputs; nothing is taken
// from the library's models.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "lwc/trail.hpp"
#include "reference_ciphers.hpp"

namespace oracle {

using lwc::uint128;

inline int parity(std::uint64_t v) { return __builtin_parityll(v); }

/// -log2(count / total) when count is a power of two dividing total.
inline int weight_of(std::uint64_t count, std::uint64_t total) {
  if (count == 0 || (count & (count - 1)) != 0) return -1;
  return __builtin_ctzll(total) - __builtin_ctzll(count);
}

/// Distribution of f(x) ^ f(x ^ a) over all x of an n-bit function.
template <class F>
std::vector<std::uint32_t> diff_counts(F f, unsigned n, std::uint64_t a) {
  std::vector<std::uint32_t> c(std::size_t{1} << n, 0);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) ++c[f(x) ^ f(x ^ a)];
  return c;
}

/// Walsh spectrum of b . f: entry g = sum_x (-1)^(b.f(x) ^ g.x).
template <class F>
std::vector<std::int64_t> walsh(F f, unsigned n, std::uint64_t b) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int64_t> w(size);
  for (std::uint64_t x = 0; x < size; ++x) w[x] = parity(b & f(x)) ? -1 : 1;
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const auto u = w[j], v = w[j + h];
        w[j] = u + v;
        w[j + h] = u - v;
      }
    }
  }
  return w;
}

inline std::uint8_t present_sbox(std::uint8_t x) {
  return static_cast<std::uint8_t>(reference::Present::kSbox[x & 0xF]);
}

inline std::uint8_t rotl8(std::uint8_t v, unsigned r) {
  return static_cast<std::uint8_t>((v << r) | (v >> (8 - r)));
}

/// Keyless round function of the toy 16-bit Feistel: S-box on both nibbles,
/// then rotate left by 3.
inline std::uint64_t toy_f(std::uint64_t x) {
  const auto s = static_cast<std::uint8_t>(present_sbox(x & 0xF) | (present_sbox((x >> 4) & 0xF) << 4));
  return rotl8(s, 3);
}

inline std::uint64_t rotl16(std::uint64_t v, unsigned r) { return ((v << r) | (v >> (16 - r))) & 0xFFFF; }

/// SIMON32 round function without the key.
inline std::uint64_t simon_f(std::uint64_t x) {
  return (rotl16(x, 1) & rotl16(x, 8)) ^ rotl16(x, 2);
}

/// PRESENT bit permutation.
inline std::uint64_t present_perm(std::uint64_t s) {
  std::uint64_t out = 0;
  for (unsigned i = 0; i < 64; ++i) {
    if ((s >> i) & 1U) out |= std::uint64_t{1} << (i == 63 ? 63 : (16 * i) % 63);
  }
  return out;
}

struct Step {
  std::uint64_t out;
  int weight;
};

/// One-round transitions of a balanced Feistel with an 8-bit keyless F on
/// the right half: (L, R) -> (R, L ^ F(R)). Every (input, output) pair with
/// nonzero probability or correlation, tabulated from the function itself.
struct ToyFeistel {
  // f_diff[a] / f_lin[b]: admissible F-output differences / F-input masks.
  std::array<std::vector<Step>, 256> f_diff, f_lin;

  ToyFeistel() {
    for (std::uint64_t a = 0; a < 256; ++a) {
      const auto c = diff_counts(toy_f, 8, a);
      for (std::uint64_t g = 0; g < 256; ++g) {
        if (c[g] != 0) f_diff[a].push_back({g, weight_of(c[g], 256)});
      }
    }
    for (std::uint64_t b = 0; b < 256; ++b) {
      const auto w = walsh(toy_f, 8, b);
      for (std::uint64_t g = 0; g < 256; ++g) {
        if (w[g] != 0) f_lin[b].push_back({g, weight_of(static_cast<std::uint64_t>(std::llabs(w[g])), 256)});
      }
    }
  }

  std::vector<Step> steps(lwc::TrailKind kind, std::uint64_t s) const {
    const std::uint64_t l = s >> 8, r = s & 0xFF;
    std::vector<Step> out;
    if (kind == lwc::TrailKind::differential) {
      for (const auto& g : f_diff[r]) out.push_back({(r << 8) | (l ^ g.out), g.weight});
    } else {
      for (const auto& g : f_lin[l]) out.push_back({((r ^ g.out) << 8) | l, g.weight});
    }
    std::sort(out.begin(), out.end(), [](const Step& a, const Step& b) { return a.out < b.out; });
    return out;
  }
};

struct Trail {
  int weight;
  std::vector<uint128> states;
};

/// Exact best trail over all 2^16 states by dynamic programming on the
/// number of remaining rounds, with the lexicographically smallest state
/// vector among optimal trails.
inline Trail best_toy_trail(const ToyFeistel& toy, lwc::TrailKind kind, unsigned rounds) {
  constexpr std::size_t kStates = 1 << 16;
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<Step>> table(kStates);
  for (std::uint64_t s = 0; s < kStates; ++s) table[s] = toy.steps(kind, s);

  // best[k][s]: minimal weight of a k-round trail starting at s.
  std::vector<std::vector<int>> best(rounds + 1, std::vector<int>(kStates, 0));
  for (unsigned k = 1; k <= rounds; ++k) {
    for (std::uint64_t s = 0; s < kStates; ++s) {
      int b = kInf;
      for (const auto& t : table[s]) b = std::min(b, t.weight + best[k - 1][t.out]);
      best[k][s] = b;
    }
  }
  Trail trail{kInf, {}};
  std::uint64_t s = 0;
  for (std::uint64_t in = 1; in < kStates; ++in) {
    if (best[rounds][in] < trail.weight) {
      trail.weight = best[rounds][in];
      s = in;
    }
  }
  trail.states.push_back(s);
  int left = trail.weight;
  for (unsigned k = rounds; k >= 1; --k) {
    for (const auto& t : table[s]) {
      if (t.weight + best[k - 1][t.out] == left) {
        left -= t.weight;
        s = t.out;
        break;
      }
    }
    trail.states.push_back(s);
  }
  return trail;
}


/// Best one-round SIMON32 trail. Inputs are scanned in ascending order and
/// the scan stops at the first input admitting a weight-0 transition: no
/// later input can beat it under the tie-break. An input is shown to have no
/// weight-0 transition by exhibiting two inputs on which the derivative (or
/// the masked output) disagrees with every affine candidate.
inline Trail simon32_one_round(lwc::TrailKind kind) {
  const bool differential = kind == lwc::TrailKind::differential;
  for (std::uint64_t in = 1; in < (std::uint64_t{1} << 32); ++in) {
    const std::uint64_t hi = in >> 16, lo = in & 0xFFFF;
    // differential (a, b) -> (b ^ g, a) with g in D(a); linear (mx, my) -> (my, mx ^ g) with g in Lin(my).
    const std::uint64_t driver = differential ? hi : lo;
    bool witness = false;
    if (differential) {
      const std::uint64_t d0 = simon_f(0) ^ simon_f(driver);
      for (std::uint64_t x = 1; x < 64 && !witness; ++x) witness = (simon_f(x) ^ simon_f(x ^ driver)) != d0;
    } else {
      // b.f is affine iff b.f(x ^ y) ^ b.f(x) ^ b.f(y) ^ b.f(0) vanishes everywhere.
      auto h = [&](std::uint64_t x) { return parity(driver & simon_f(x)); };
      for (unsigned i = 0; i < 16 && !witness; ++i) {
        for (unsigned j = i + 1; j < 16 && !witness; ++j) {
          const std::uint64_t x = std::uint64_t{1} << i, y = std::uint64_t{1} << j;
          witness = (h(x ^ y) ^ h(x) ^ h(y) ^ h(0)) != 0;
        }
      }
    }
    if (witness) continue;

    std::vector<std::uint64_t> outs;
    if (differential) {
      const auto c = diff_counts(simon_f, 16, driver);
      for (std::uint64_t g = 0; g < c.size(); ++g) {
        if (c[g] == 65536) outs.push_back(((lo ^ g) << 16) | hi);
      }
    } else {
      const auto w = walsh(simon_f, 16, driver);
      for (std::uint64_t g = 0; g < w.size(); ++g) {
        if (std::llabs(w[g]) == 65536) outs.push_back((lo << 16) | (hi ^ g));
      }
    }
    if (outs.empty()) continue;
    return Trail{0, {in, *std::min_element(outs.begin(), outs.end())}};
  }
  return Trail{-1, {}};
}

/// Best one-round PRESENT trail. Only inputs with one active nibble are
/// enumerated; the function checks that the best of those is strictly
/// cheaper than any input with two or more active nibbles could be, and
/// returns weight -1 otherwise.
inline Trail present_one_round(lwc::TrailKind kind) {
  auto s = [](std::uint64_t x) -> std::uint64_t { return present_sbox(static_cast<std::uint8_t>(x)); };
  // nibble[a] = admissible (output, weight) through one S-box.
  std::array<std::vector<Step>, 16> nibble;
  int cheapest = std::numeric_limits<int>::max();
  for (std::uint64_t a = 1; a < 16; ++a) {
    if (kind == lwc::TrailKind::differential) {
      const auto c = diff_counts(s, 4, a);
      for (std::uint64_t b = 0; b < 16; ++b) {
        if (c[b] != 0) nibble[a].push_back({b, weight_of(c[b], 16)});
      }
    } else {
      for (std::uint64_t b = 1; b < 16; ++b) {
        const auto w = walsh(s, 4, b);
        if (w[a] != 0) nibble[a].push_back({b, weight_of(static_cast<std::uint64_t>(std::llabs(w[a])), 16)});
      }
    }
    for (const auto& t : nibble[a]) cheapest = std::min(cheapest, t.weight);
  }
  Trail best{std::numeric_limits<int>::max(), {}};
  for (unsigned pos = 0; pos < 16; ++pos) {
    for (std::uint64_t a = 1; a < 16; ++a) {
      for (const auto& t : nibble[a]) {
        const uint128 in = a << (4 * pos);
        const uint128 out = present_perm(t.out << (4 * pos));
        const std::vector<uint128> states{in, out};
        if (t.weight < best.weight || (t.weight == best.weight && states < best.states)) best = {t.weight, states};
      }
    }
  }
  if (best.weight >= 2 * cheapest) best.weight = -1;
  return best;
}

}  // namespace oracle
