#include "lwc/kat.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lwc/cipher.hpp"
#include "lwc/error.hpp"

namespace lwc {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

std::vector<KatRecord> parse_kat(std::istream& in) {
  std::vector<KatRecord> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;

    std::vector<std::string> fields;
    std::istringstream split(line);
    for (std::string f; std::getline(split, f, ',');) fields.push_back(trim(f));
    if (fields.size() != 4) {
      throw MalformedKatRecord(n, "expected 4 comma-separated fields, got " + std::to_string(fields.size()));
    }

    KatRecord r{n, fields[0], {}, {}, {}};
    if (!is_registered(r.spec_id)) throw MalformedKatRecord(n, "unknown spec id '" + r.spec_id + "'");
    const CipherSpec spec = lookup_spec(r.spec_id);
    try {
      r.key = parse_hex(fields[1]);
      r.plaintext = parse_hex(fields[2]);
      r.ciphertext = parse_hex(fields[3]);
    } catch (const InvalidArgument& e) {
      throw MalformedKatRecord(n, e.what());
    }
    if (r.key.size() != spec.key_bytes()) {
      throw MalformedKatRecord(n, "key has " + std::to_string(r.key.size()) + " bytes, " + r.spec_id + " needs " +
                                      std::to_string(spec.key_bytes()));
    }
    if (r.plaintext.size() != spec.block_bytes() || r.ciphertext.size() != spec.block_bytes()) {
      throw MalformedKatRecord(n, "blocks must have " + std::to_string(spec.block_bytes()) + " bytes");
    }
    out.push_back(std::move(r));
  }
  return out;
}

KatSummary run_kat(const std::vector<KatRecord>& records) {
  KatSummary s;
  for (const auto& r : records) {
    const auto ctx = make_cipher(r.spec_id, r.key);
    const unsigned width = ctx.spec().block_bits;
    const Block ct = encrypt_block(ctx, block_from_bytes(r.plaintext, width));
    const Block expected = block_from_bytes(r.ciphertext, width);
    const bool round_trip = decrypt_block(ctx, expected) == block_from_bytes(r.plaintext, width);
    if (ct == expected && round_trip) {
      ++s.passed;
    } else {
      ++s.failed;
      s.failures.push_back({r.line, r.spec_id, block_to_hex(expected),
                            ct == expected ? "decryption mismatch" : block_to_hex(ct)});
    }
  }
  return s;
}

KatSummary run_kat(std::istream& in) { return run_kat(parse_kat(in)); }

KatSummary run_kat(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open KAT file '" + path.string() + "'");
  return run_kat(in);
}

}  // namespace lwc
