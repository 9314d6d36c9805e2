#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "builtin.hpp"
#include "lwc/cipher.hpp"
#include "lwc/error.hpp"

namespace lwc {

namespace {

struct StoredEntry {
  std::shared_ptr<const CipherSpec> spec;
  detail::EngineFactory factory;
};

class Registry {
 public:
  static Registry& instance() {
    static Registry registry;
    return registry;
  }

  void add(detail::RegistryEntry entry) {
    std::unique_lock lock(mutex_);
    add_locked(std::move(entry));
  }

  StoredEntry find(std::string_view id) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(id);
    if (it == entries_.end()) throw UnknownSpec(std::string(id));
    return it->second;
  }

  bool contains(std::string_view id) const {
    std::shared_lock lock(mutex_);
    return entries_.find(id) != entries_.end();
  }

  std::vector<std::string> ids() const {
    std::shared_lock lock(mutex_);
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [id, entry] : entries_) out.push_back(id);
    return out;
  }

 private:
  Registry() {
    for (auto* source : {&detail::present_entries, &detail::simon_speck_entries,
                         &detail::feistel_example_entries}) {
      for (auto& entry : source()) add_locked(std::move(entry));
    }
  }

  void add_locked(detail::RegistryEntry entry) {
    const std::string id = entry.spec.id;
    if (entries_.count(id) != 0) throw InvalidDefinition("spec id already registered: " + id);
    if (entry.spec.rounds == 0) throw InvalidDefinition("rounds must be positive: " + id);
    entries_.emplace(id, StoredEntry{std::make_shared<const CipherSpec>(std::move(entry.spec)),
                                     std::move(entry.factory)});
  }

  mutable std::shared_mutex mutex_;
  std::map<std::string, StoredEntry, std::less<>> entries_;
};

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::present:
      return "PRESENT";
    case Family::simon:
      return "SIMON";
    case Family::speck:
      return "SPECK";
    case Family::feistel_custom:
      return "FEISTEL_CUSTOM";
  }
  return "?";
}

void detail::register_cipher(RegistryEntry entry) { Registry::instance().add(std::move(entry)); }

CipherContext make_cipher(std::string_view spec_id, std::span<const std::uint8_t> key) {
  auto entry = Registry::instance().find(spec_id);
  if (key.size() != entry.spec->key_bytes()) {
    throw KeyLengthMismatch(entry.spec->key_bytes(), key.size());
  }
  return CipherContext(entry.spec, entry.factory(key));
}

Block encrypt_block(const CipherContext& ctx, const Block& b) {
  if (b.width() != ctx.spec().block_bits) throw BlockWidthMismatch(ctx.spec().block_bits, b.width());
  return Block(ctx.encrypt_bits(b.bits()), b.width());
}

Block decrypt_block(const CipherContext& ctx, const Block& b) {
  if (b.width() != ctx.spec().block_bits) throw BlockWidthMismatch(ctx.spec().block_bits, b.width());
  return Block(ctx.decrypt_bits(b.bits()), b.width());
}

CipherSpec lookup_spec(std::string_view spec_id) { return *Registry::instance().find(spec_id).spec; }

bool is_registered(std::string_view spec_id) { return Registry::instance().contains(spec_id); }

std::vector<std::string> registered_specs() { return Registry::instance().ids(); }

}  // namespace lwc
