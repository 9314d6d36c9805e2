#pragma once

#include <vector>

#include "lwc/cipher.hpp"

namespace lwc::detail {

std::vector<RegistryEntry> present_entries();
std::vector<RegistryEntry> simon_speck_entries();
std::vector<RegistryEntry> feistel_example_entries();

}  // namespace lwc::detail
