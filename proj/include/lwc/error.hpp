#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lwc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied a malformed argument (bad hex, out-of-range count, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnknownSpec : public Error {
 public:
  explicit UnknownSpec(const std::string& id) : Error("UnknownSpec: " + id) {}
};

class KeyLengthMismatch : public Error {
 public:
  KeyLengthMismatch(std::size_t expected_bytes, std::size_t got_bytes)
      : Error("KeyLengthMismatch: expected " + std::to_string(expected_bytes) +
              " bytes, got " + std::to_string(got_bytes)) {}
};

class BlockWidthMismatch : public Error {
 public:
  BlockWidthMismatch(unsigned expected_bits, unsigned got_bits)
      : Error("BlockWidthMismatch: expected " + std::to_string(expected_bits) +
              " bits, got " + std::to_string(got_bits)) {}
};

class WidthMismatch : public Error {
 public:
  using Error::Error;
};

class NonBijectivePermutation : public Error {
 public:
  using Error::Error;
};

class InvalidDefinition : public Error {
 public:
  using Error::Error;
};

class UnsupportedBlockWidth : public Error {
 public:
  explicit UnsupportedBlockWidth(unsigned bits)
      : Error("UnsupportedBlockWidth: " + std::to_string(bits) + " bits") {}
};

class InvalidTagLength : public Error {
 public:
  InvalidTagLength(std::size_t expected_bytes, std::size_t got_bytes)
      : Error("InvalidTagLength: expected " + std::to_string(expected_bytes) +
              " bytes, got " + std::to_string(got_bytes)) {}
};

/// Errors that carry the 1-based line number of the offending input line.
class LineError : public Error {
 public:
  LineError(const std::string& kind, std::size_t line, const std::string& detail)
      : Error(kind + "(line " + std::to_string(line) + "): " + detail), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MalformedRow : public LineError {
 public:
  MalformedRow(std::size_t line, const std::string& detail)
      : LineError("MalformedRow", line, detail) {}
};

class MalformedKatRecord : public LineError {
 public:
  MalformedKatRecord(std::size_t line, const std::string& detail)
      : LineError("MalformedKatRecord", line, detail) {}
};

class NonMonotonicTimestamps : public LineError {
 public:
  NonMonotonicTimestamps(std::size_t line, const std::string& detail)
      : LineError("NonMonotonicTimestamps", line, detail) {}
};

/// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

class WindowOutOfRange : public Error {
 public:
  using Error::Error;
};

class ClockResolutionTooCoarse : public Error {
 public:
  using Error::Error;
};

}  // namespace lwc
