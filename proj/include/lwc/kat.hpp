#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lwc/hex.hpp"

namespace lwc {

/// One line `spec_id, key, plaintext, ciphertext`; `#` starts a comment.
struct KatRecord {
  std::size_t line;
  std::string spec_id;
  Bytes key;
  Bytes plaintext;
  Bytes ciphertext;
};

/// Throws MalformedKatRecord for a wrong field count, bad hex, an unknown
/// spec id or a key/block length that does not fit the spec.
std::vector<KatRecord> parse_kat(std::istream& in);

struct KatFailure {
  std::size_t line;
  std::string spec_id;
  std::string expected;
  std::string got;
};

struct KatSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<KatFailure> failures;

  bool ok() const noexcept { return failed == 0; }
};

/// Encrypts every record through the registry and checks the ciphertext;
/// also checks that decryption restores the plaintext.
KatSummary run_kat(const std::vector<KatRecord>& records);
KatSummary run_kat(std::istream& in);
/// Throws IoError when the file cannot be opened.
KatSummary run_kat(const std::filesystem::path& path);

}  // namespace lwc
