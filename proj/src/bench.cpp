#include "lwc/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "lwc/error.hpp"

namespace lwc {

namespace {

using Clock = std::chrono::steady_clock;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::optional<double> parse_double(const std::string& field) {
  const std::string t = trim(field);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

double timer_resolution_seconds() {
  static const double resolution = [] {
    const double nominal = static_cast<double>(Clock::period::num) / Clock::period::den;
    // Smallest observable step between successive readings.
    auto best = Clock::duration::max();
    for (int i = 0; i < 200; ++i) {
      const auto a = Clock::now();
      auto b = Clock::now();
      while (b == a) b = Clock::now();
      best = std::min(best, b - a);
    }
    return std::max(nominal, std::chrono::duration<double>(best).count());
  }();
  return resolution;
}

BenchReport measure_throughput(const CipherContext& ctx, std::uint64_t n_blocks, unsigned repetitions) {
  if (n_blocks == 0) throw InvalidArgument("n_blocks must be >= 1");
  if (repetitions < 3) throw InvalidArgument("repetitions must be >= 3");
  const unsigned width = ctx.spec().block_bits;

  std::mt19937_64 rng(0);
  std::vector<uint128> blocks(n_blocks);
  for (auto& b : blocks) b = ((uint128{rng()} << 64) | rng()) & block_mask(width);

  std::vector<double> times;
  uint128 sink = 0;
  for (unsigned r = 0; r < repetitions; ++r) {
    const auto start = Clock::now();
    for (const auto b : blocks) sink ^= ctx.encrypt_bits(b);
    const auto stop = Clock::now();
    times.push_back(std::chrono::duration<double>(stop - start).count());
  }
  // Keeps the loop observable.
  volatile std::uint64_t keep = static_cast<std::uint64_t>(sink);
  (void)keep;

  std::sort(times.begin(), times.end());
  const double median = times.size() % 2 ? times[times.size() / 2]
                                          : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2;
  const double floor_seconds = 1000 * timer_resolution_seconds();
  if (!(median >= floor_seconds)) {
    throw ClockResolutionTooCoarse("ClockResolutionTooCoarse: median " + number(median) + " s is below " +
                                   number(floor_seconds) + " s; increase n_blocks");
  }

  BenchReport report;
  report.spec_id = ctx.spec().id;
  report.n_bits = n_blocks * width;
  report.elapsed_seconds = median;
  report.throughput_bps = static_cast<double>(report.n_bits) / median;
  report.bytes_state = measure_memory(ctx).total();
  report.repetitions = repetitions;
  report.timestamp = utc_timestamp();
  return report;
}

MemoryReport measure_memory(const CipherContext& ctx) {
  const CipherSpec& spec = ctx.spec();
  MemoryReport report{spec.id, {}};
  report.items.push_back({"round_keys", ctx.round_keys().size() * ((ctx.round_key_bits() + 7) / 8)});
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PresentConstants>) {
          report.items.push_back({"sbox", c.sbox.size()});
          report.items.push_back({"inverse_sbox", c.sbox.size()});
        } else if constexpr (std::is_same_v<T, SimonConstants>) {
          report.items.push_back({"z_sequence", 8});
        } else if constexpr (std::is_same_v<T, FeistelConstants>) {
          if (c.table_bytes != 0) report.items.push_back({"tables", c.table_bytes});
        }
      },
      spec.constants);
  report.items.push_back({"state", spec.block_bytes()});
  return report;
}

PowerLog ingest_power_log(std::istream& in) {
  PowerLog log;
  std::string line;
  std::size_t number_of_line = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++number_of_line;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header) {
      if (trim(line) != "t_seconds,watts") {
        throw MalformedRow(number_of_line, "expected header 't_seconds,watts'");
      }
      header = true;
      continue;
    }
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw MalformedRow(number_of_line, "expected two fields");
    }
    const auto t = parse_double(line.substr(0, comma));
    const auto w = parse_double(line.substr(comma + 1));
    if (!t || !w) throw MalformedRow(number_of_line, "fields must be finite numbers");
    if (*w < 0) throw MalformedRow(number_of_line, "watts must be >= 0");
    if (!log.samples.empty() && !(*t > log.samples.back().t_seconds)) {
      throw NonMonotonicTimestamps(number_of_line, "timestamps must be strictly increasing");
    }
    log.samples.push_back({*t, *w});
  }
  if (!header) throw MalformedRow(1, "missing header 't_seconds,watts'");
  return log;
}

PowerLog ingest_power_log(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open power log '" + path.string() + "'");
  return ingest_power_log(in);
}

Energy energy_per_bit(const PowerLog& log, double t0, double t1, std::uint64_t n_bits) {
  if (n_bits == 0) throw InvalidArgument("n_bits must be >= 1");
  const auto& s = log.samples;
  if (s.size() < 2 || !(t0 < t1) || t0 < s.front().t_seconds || t1 > s.back().t_seconds) {
    throw WindowOutOfRange("WindowOutOfRange: [" + number(t0) + ", " + number(t1) +
                           "] is not a non-empty window inside the log");
  }
  auto at = [](const PowerSample& a, const PowerSample& b, double t) {
    if (t == a.t_seconds) return a.watts;
    if (t == b.t_seconds) return b.watts;
    return a.watts + (b.watts - a.watts) * (t - a.t_seconds) / (b.t_seconds - a.t_seconds);
  };
  double joules = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double lo = std::max(s[i].t_seconds, t0);
    const double hi = std::min(s[i + 1].t_seconds, t1);
    if (!(lo < hi)) continue;
    joules += (hi - lo) * (at(s[i], s[i + 1], lo) + at(s[i], s[i + 1], hi)) / 2;
  }
  return {joules, joules / static_cast<double>(n_bits)};
}

void attach_energy(BenchReport& report, const PowerLog& log, double t0, double t1) {
  const Energy e = energy_per_bit(log, t0, t1, report.n_bits);
  report.energy_joules = e.joules;
  report.joules_per_bit = e.joules_per_bit;
}

std::string to_json(const BenchReport& r) {
  nlohmann::ordered_json j;
  j["spec_id"] = r.spec_id;
  j["n_bits"] = r.n_bits;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["throughput_bps"] = r.throughput_bps;
  j["bytes_state"] = r.bytes_state;
  j["energy_joules"] = r.energy_joules ? nlohmann::ordered_json(*r.energy_joules) : nullptr;
  j["joules_per_bit"] = r.joules_per_bit ? nlohmann::ordered_json(*r.joules_per_bit) : nullptr;
  j["repetitions"] = r.repetitions;
  j["timestamp"] = r.timestamp;
  return j.dump(2);
}

std::string csv_header() {
  return "spec_id,n_bits,elapsed_seconds,throughput_bps,bytes_state,energy_joules,joules_per_bit,repetitions,"
         "timestamp";
}

std::string to_csv_row(const BenchReport& r) {
  std::ostringstream out;
  out << r.spec_id << ',' << r.n_bits << ',' << number(r.elapsed_seconds) << ',' << number(r.throughput_bps)
      << ',' << r.bytes_state << ',' << (r.energy_joules ? number(*r.energy_joules) : "") << ','
      << (r.joules_per_bit ? number(*r.joules_per_bit) : "") << ',' << r.repetitions << ',' << r.timestamp;
  return out.str();
}

}  // namespace lwc
