#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lwc {

struct MemoryItem {
  std::string name;
  std::size_t bytes;

  friend bool operator==(const MemoryItem&, const MemoryItem&) = default;
};

/// Static byte accounting of persistent state; no measurement involved.
struct MemoryReport {
  std::string spec_id;
  std::vector<MemoryItem> items;

  std::size_t total() const noexcept {
    std::size_t sum = 0;
    for (const auto& i : items) sum += i.bytes;
    return sum;
  }

  friend bool operator==(const MemoryReport&, const MemoryReport&) = default;
};

}  // namespace lwc
