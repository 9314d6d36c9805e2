#include "lwc/feistel.hpp"

#include <memory>
#include <string>

#include "builtin.hpp"
#include "lwc/error.hpp"
#include "lwc/present.hpp"
#include "lwc/simon_speck.hpp"

namespace lwc {

namespace {

class FeistelEngine final : public detail::CipherEngine {
 public:
  FeistelEngine(std::shared_ptr<const FeistelDef> def, std::vector<std::uint64_t> round_keys)
      : def_(std::move(def)), round_keys_(std::move(round_keys)) {}

  uint128 encrypt(uint128 block) const noexcept override {
    const unsigned w = def_->word_bits;
    std::uint64_t l = static_cast<std::uint64_t>(block >> w);
    std::uint64_t r = static_cast<std::uint64_t>(block) & word_mask(w);
    for (auto k : round_keys_) {
      const std::uint64_t t = r;
      r = l ^ f(r, k);
      l = t;
    }
    if (def_->final_swap) std::swap(l, r);
    return (uint128{l} << w) | r;
  }

  uint128 decrypt(uint128 block) const noexcept override {
    const unsigned w = def_->word_bits;
    std::uint64_t l = static_cast<std::uint64_t>(block >> w);
    std::uint64_t r = static_cast<std::uint64_t>(block) & word_mask(w);
    if (def_->final_swap) std::swap(l, r);
    for (auto it = round_keys_.rbegin(); it != round_keys_.rend(); ++it) {
      const std::uint64_t t = l;
      l = r ^ f(l, *it);
      r = t;
    }
    return (uint128{l} << w) | r;
  }

  std::span<const std::uint64_t> round_keys() const noexcept override { return round_keys_; }
  unsigned round_key_bits() const noexcept override { return def_->word_bits; }

 private:
  std::uint64_t f(std::uint64_t half, std::uint64_t key) const noexcept {
    const unsigned w = def_->word_bits;
    return def_->round_function(Word(half, w), Word(key, w)).value() & word_mask(w);
  }

  std::shared_ptr<const FeistelDef> def_;
  std::vector<std::uint64_t> round_keys_;
};

std::vector<std::uint64_t> expand_keys(const FeistelDef& def, std::span<const std::uint8_t> key) {
  const std::vector<Word> words = def.schedule(key);
  if (words.size() != def.rounds) {
    throw InvalidDefinition("InvalidDefinition: schedule produced " +
                            std::to_string(words.size()) + " round keys for " +
                            std::to_string(def.rounds) + " rounds");
  }
  std::vector<std::uint64_t> out;
  out.reserve(words.size());
  for (const auto& k : words) {
    if (k.width() != def.word_bits) {
      throw InvalidDefinition("InvalidDefinition: round key width " + std::to_string(k.width()) +
                              " does not match round function width " +
                              std::to_string(def.word_bits));
    }
    out.push_back(k.value());
  }
  return out;
}

void validate(const FeistelDef& def) {
  auto fail = [&](const std::string& why) {
    throw InvalidDefinition("InvalidDefinition(" + def.name + "): " + why);
  };
  if (def.name.empty()) fail("empty name");
  for (char c : def.name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok) fail("name may only contain [a-z0-9-]");
  }
  if (def.rounds == 0) fail("zero rounds");
  if (def.word_bits == 0 || def.word_bits > Word::kMaxWidth || def.word_bits % 4 != 0) {
    fail("word width must be a multiple of 4 in [4, 64]");
  }
  if (def.key_bits == 0 || def.key_bits % 8 != 0) fail("key width must be a positive multiple of 8");
  if (!def.round_function) fail("missing round function");
  if (!def.schedule) fail("missing key schedule");

  const std::vector<std::uint8_t> probe_key(def.key_bits / 8, 0);
  expand_keys(def, probe_key);
  const Word zero(0, def.word_bits);
  if (def.round_function(zero, zero).width() != def.word_bits) {
    fail("round function output width differs from its input width");
  }
}

detail::RegistryEntry make_entry(FeistelDef def) {
  validate(def);
  auto shared = std::make_shared<const FeistelDef>(std::move(def));
  CipherSpec spec{kFeistelPrefix + shared->name,
                  Family::feistel_custom,
                  2 * shared->word_bits,
                  shared->key_bits,
                  shared->rounds,
                  FeistelConstants{shared->word_bits, shared->final_swap, shared->table_bytes}};
  return {std::move(spec), [shared](std::span<const std::uint8_t> key) {
            return std::make_shared<const FeistelEngine>(shared, expand_keys(*shared, key));
          }};
}

std::vector<Word> key_words_be(std::span<const std::uint8_t> key, unsigned word_bits) {
  const std::size_t bytes = word_bits / 8;
  std::vector<Word> out;
  for (std::size_t start = key.size(); start >= bytes; start -= bytes) {
    std::uint64_t v = 0;
    for (std::size_t b = start - bytes; b < start; ++b) v = (v << 8) | key[b];
    out.emplace_back(v, word_bits);
  }
  return out;
}

}  // namespace

FeistelFactory build_feistel(FeistelDef def) {
  auto entry = make_entry(std::move(def));
  std::string id = entry.spec.id;
  detail::register_cipher(std::move(entry));
  return FeistelFactory(std::move(id));
}

namespace feistel_examples {

FeistelDef xor_rotate() {
  FeistelDef def;
  def.name = "xorrot";
  def.word_bits = 32;
  def.key_bits = 128;
  def.rounds = 32;
  def.round_function = [](Word x, Word k) {
    const Word t = x ^ k;
    return t ^ rotl(t, 3) ^ rotl(t, 11);
  };
  def.schedule = [](std::span<const std::uint8_t> key) {
    const auto k = key_words_be(key, 32);
    std::vector<Word> out;
    for (unsigned i = 0; i < 32; ++i) {
      out.push_back(k[i % 4] ^ rotl(k[(i + 1) % 4], i + 1) ^ Word(i, 32));
    }
    return out;
  };
  return def;
}

std::uint8_t toy_sbox_byte(std::uint8_t x) noexcept {
  return static_cast<std::uint8_t>((present::kSbox[x >> 4] << 4) | present::kSbox[x & 0xF]);
}

FeistelDef sbox_rotate16() {
  FeistelDef def;
  def.name = "sboxrot16";
  def.word_bits = 8;
  def.key_bits = 32;
  def.rounds = 12;
  def.table_bytes = 16;
  def.round_function = [](Word x, Word k) {
    const auto s = toy_sbox_byte(static_cast<std::uint8_t>((x ^ k).value()));
    return rotl(Word(s, 8), kToyRotation);
  };
  def.schedule = [](std::span<const std::uint8_t> key) {
    std::vector<Word> out;
    for (unsigned i = 0; i < 12; ++i) {
      out.push_back(rotl(Word(key[i % 4], 8), i / 4) ^ Word(i + 1, 8));
    }
    return out;
  };
  return def;
}

FeistelDef simon64() {
  FeistelDef def;
  def.name = "simon64";
  def.word_bits = 32;
  def.key_bits = 128;
  def.rounds = 44;
  def.table_bytes = 8;
  def.round_function = [](Word x, Word k) { return simon_f(x) ^ k; };
  def.schedule = [](std::span<const std::uint8_t> key) {
    std::vector<Word> out;
    for (auto k : simon_key_schedule(simon_params(64, 128), key)) out.emplace_back(k, 32);
    return out;
  };
  return def;
}

}  // namespace feistel_examples

}  // namespace lwc

namespace lwc::detail {

std::vector<RegistryEntry> feistel_example_entries() {
  std::vector<RegistryEntry> out;
  out.push_back(make_entry(feistel_examples::xor_rotate()));
  out.push_back(make_entry(feistel_examples::sbox_rotate16()));
  out.push_back(make_entry(feistel_examples::simon64()));
  return out;
}

}  // namespace lwc::detail
