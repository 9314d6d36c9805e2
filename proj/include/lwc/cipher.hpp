#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lwc/words.hpp"

namespace lwc {

enum class Family { present, simon, speck, feistel_custom };

std::string_view family_name(Family f) noexcept;

struct PresentConstants {
  std::array<std::uint8_t, 16> sbox;
};

struct SimonConstants {
  unsigned word_bits;
  unsigned key_words;
  unsigned z_index;
  std::array<unsigned, 3> rotations{1, 8, 2};
};

struct SpeckConstants {
  unsigned word_bits;
  unsigned key_words;
  unsigned alpha;
  unsigned beta;
};

struct FeistelConstants {
  unsigned word_bits;
  bool final_swap;
  /// Bytes of constant lookup tables the round function reads.
  std::size_t table_bytes;
};

using CipherConstants =
    std::variant<PresentConstants, SimonConstants, SpeckConstants, FeistelConstants>;

/// Static parameter record for one registered cipher.
struct CipherSpec {
  std::string id;
  Family family;
  unsigned block_bits;
  unsigned key_bits;
  unsigned rounds;
  CipherConstants constants;

  std::size_t key_bytes() const noexcept { return key_bits / 8; }
  std::size_t block_bytes() const noexcept { return block_bits / 8; }
};

namespace detail {

/// Family-specific keyed implementation behind a CipherContext.
class CipherEngine {
 public:
  virtual ~CipherEngine() = default;
  virtual uint128 encrypt(uint128 block) const noexcept = 0;
  virtual uint128 decrypt(uint128 block) const noexcept = 0;
  virtual std::span<const std::uint64_t> round_keys() const noexcept = 0;
  virtual unsigned round_key_bits() const noexcept = 0;
};

using EngineFactory =
    std::function<std::shared_ptr<const CipherEngine>(std::span<const std::uint8_t> key)>;

struct RegistryEntry {
  CipherSpec spec;
  EngineFactory factory;
};

/// Adds an entry; throws InvalidDefinition if the id is already taken.
void register_cipher(RegistryEntry entry);

}  // namespace detail

/// Immutable keyed cipher instance. Cheap to copy; safe to share between
/// threads.
class CipherContext {
 public:
  const CipherSpec& spec() const noexcept { return *spec_; }
  std::span<const std::uint64_t> round_keys() const noexcept { return engine_->round_keys(); }
  unsigned round_key_bits() const noexcept { return engine_->round_key_bits(); }

  /// Unchecked fast path on raw block bits (must be < 2^block_bits).
  uint128 encrypt_bits(uint128 block) const noexcept { return engine_->encrypt(block); }
  uint128 decrypt_bits(uint128 block) const noexcept { return engine_->decrypt(block); }

 private:
  friend CipherContext make_cipher(std::string_view spec_id, std::span<const std::uint8_t> key);

  CipherContext(std::shared_ptr<const CipherSpec> spec,
                std::shared_ptr<const detail::CipherEngine> engine)
      : spec_(std::move(spec)), engine_(std::move(engine)) {}

  std::shared_ptr<const CipherSpec> spec_;
  std::shared_ptr<const detail::CipherEngine> engine_;
};

/// Builds a keyed context for a registered spec id such as "present-64-80".
/// Throws UnknownSpec or KeyLengthMismatch.
CipherContext make_cipher(std::string_view spec_id, std::span<const std::uint8_t> key);

/// Throws BlockWidthMismatch when b.width() differs from the spec.
Block encrypt_block(const CipherContext& ctx, const Block& b);
Block decrypt_block(const CipherContext& ctx, const Block& b);

/// Throws UnknownSpec.
CipherSpec lookup_spec(std::string_view spec_id);
bool is_registered(std::string_view spec_id);
/// Sorted list of every registered id.
std::vector<std::string> registered_specs();

}  // namespace lwc
