#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lwc/cipher.hpp"
#include "lwc/memory.hpp"

namespace lwc {

struct BenchReport {
  std::string spec_id;
  /// N = blocks per repetition x block width.
  std::uint64_t n_bits;
  /// Median repetition, T.
  double elapsed_seconds;
  /// N / T.
  double throughput_bps;
  /// Total of measure_memory.
  std::size_t bytes_state;
  std::optional<double> energy_joules;
  std::optional<double> joules_per_bit;
  unsigned repetitions;
  /// ISO 8601, UTC.
  std::string timestamp;
};

/// Encrypts n_blocks pseudo-random blocks (fixed seed) in one timed loop per
/// repetition and reports the median. Throws InvalidArgument for n_blocks == 0
/// or repetitions < 3, and ClockResolutionTooCoarse when the median is below
/// 1000 timer ticks.
BenchReport measure_throughput(const CipherContext& ctx, std::uint64_t n_blocks, unsigned repetitions);

/// Effective resolution of the clock used for timing, in seconds.
double timer_resolution_seconds();

/// Round keys, constant tables and the working block.
MemoryReport measure_memory(const CipherContext& ctx);

struct PowerSample {
  double t_seconds;
  double watts;
};

struct PowerLog {
  std::vector<PowerSample> samples;
};

/// CSV with header `t_seconds,watts`. Throws MalformedRow (1-based line
/// number, header is line 1) and NonMonotonicTimestamps.
PowerLog ingest_power_log(std::istream& in);
/// Throws IoError when the file cannot be opened.
PowerLog ingest_power_log(const std::filesystem::path& path);

struct Energy {
  double joules;
  double joules_per_bit;
};

/// Trapezoidal integral of the log over [t0, t1], with linear interpolation
/// at the window edges. Throws WindowOutOfRange unless
/// first <= t0 < t1 <= last, and InvalidArgument for n_bits == 0.
Energy energy_per_bit(const PowerLog& log, double t0, double t1, std::uint64_t n_bits);

/// Stores energy and energy per bit of report.n_bits into the report.
void attach_energy(BenchReport& report, const PowerLog& log, double t0, double t1);

std::string to_json(const BenchReport& report);
std::string csv_header();
std::string to_csv_row(const BenchReport& report);

}  // namespace lwc
