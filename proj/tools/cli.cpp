#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lwc/analysis.hpp"
#include "lwc/bench.hpp"
#include "lwc/cipher.hpp"
#include "lwc/cmac.hpp"
#include "lwc/error.hpp"
#include "lwc/hex.hpp"
#include "lwc/kat.hpp"
#include "lwc/trail.hpp"

namespace lwc::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for arguments that parse but cannot be honoured.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Errors caused by the command line itself rather than by files or the run.
bool is_usage_error(const std::exception& e) {
  return dynamic_cast<const UsageError*>(&e) || dynamic_cast<const UnknownSpec*>(&e) ||
         dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const KeyLengthMismatch*>(&e) ||
         dynamic_cast<const BlockWidthMismatch*>(&e) || dynamic_cast<const InvalidTagLength*>(&e) ||
         dynamic_cast<const UnsupportedBlockWidth*>(&e);
}

std::string paint(const Options& o, const std::string& text, bool good) {
  if (!o.color) return text;
  return std::string(good ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
}

/// A readable file is taken as raw bytes; anything else must be hex.
Bytes read_input(const std::string& value) {
  std::error_code ec;
  if (!value.empty() && std::filesystem::is_regular_file(value, ec)) {
    std::ifstream in(value, std::ios::binary);
    if (!in) throw IoError("cannot read '" + value + "'");
    return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_hex(value);
}

std::string state_hex(uint128 v, unsigned bits) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string s((bits + 3) / 4, '0');
  for (std::size_t i = s.size(); i-- > 0;) {
    s[i] = kDigits[static_cast<unsigned>(v & 0xF)];
    v >>= 4;
  }
  return s;
}

void print_blocks(const CipherContext& ctx, const Bytes& data, bool encrypt, std::ostream& out) {
  const std::size_t n = ctx.spec().block_bytes();
  if (data.empty() || data.size() % n != 0) {
    throw UsageError("input must be a non-empty multiple of " + std::to_string(n) + " bytes (ECB, one block per line)");
  }
  for (std::size_t i = 0; i < data.size(); i += n) {
    const Block in = block_from_bytes(std::span(data).subspan(i, n), ctx.spec().block_bits);
    out << block_to_hex(encrypt ? encrypt_block(ctx, in) : decrypt_block(ctx, in)) << '\n';
  }
}

void print_table(const AnalysisTable& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json rows = Json::array();
    for (std::size_t a = 0; a < t.size(); ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < t.size(); ++b) row.push_back(t.at(a, b));
      rows.push_back(row);
    }
    Json j;
    j["kind"] = t.kind == TableKind::ddt ? "DDT" : "LAT";
    j["n"] = t.n;
    j["bijective"] = t.bijective;
    j["entries"] = rows;
    out << j.dump(2) << '\n';
    return;
  }
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) out << (b ? "," : "") << t.at(a, b);
    out << '\n';
  }
}

Json trail_json(const TrailResult& r, unsigned state_bits, double bound) {
  Json j;
  j["model"] = r.model;
  j["kind"] = trail_kind_name(r.kind);
  j["rounds"] = r.rounds;
  j["log2_bound"] = bound;
  j["weight_cap"] = r.weight_cap;
  j["found"] = r.found;
  if (r.found) {
    j["weight"] = r.weight;
    j["log2_value"] = r.log2_value();
    Json states = Json::array();
    for (auto s : r.states) states.push_back(state_hex(s, state_bits));
    j["states"] = states;
    j["round_weights"] = r.round_weights;
  } else {
    j["status"] = "BoundTooTight";
  }
  j["nodes"] = r.nodes;
  return j;
}

std::pair<double, double> parse_window(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("comma");
    std::size_t used0 = 0, used1 = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const double t0 = std::stod(a, &used0), t1 = std::stod(b, &used1);
    if (used0 != a.size() || used1 != b.size()) throw std::invalid_argument("trailing");
    return {t0, t1};
  } catch (const std::logic_error&) {
    throw UsageError("--window expects t0,t1");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options) {
  CLI::App app{"Lightweight block cipher toolkit"};
  app.name("lwc");
  app.require_subcommand(1);

  std::string spec_id, key_hex, input, format = "json", tag_hex;

  auto* list = app.add_subcommand("list", "List registered cipher specs");

  auto* encrypt = app.add_subcommand("encrypt", "Encrypt blocks (ECB test tooling)");
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt blocks (ECB test tooling)");
  for (auto* sub : {encrypt, decrypt}) {
    sub->add_option("--spec", spec_id, "Cipher spec id")->required();
    sub->add_option("--key", key_hex, "Key as hex")->required();
    sub->add_option("--in", input, "Input hex or file")->required();
  }

  auto* kat = app.add_subcommand("kat", "Known-answer tests");
  kat->require_subcommand(1);
  auto* kat_run = kat->add_subcommand("run", "Run a KAT file");
  std::string kat_file;
  bool kat_json = false;
  kat_run->add_option("file", kat_file, "KAT file")->required();
  kat_run->add_flag("--json", kat_json, "Print the summary as JSON");

  auto* bench = app.add_subcommand("bench", "Throughput, memory and energy report");
  std::uint64_t blocks = 100000;
  unsigned reps = 5;
  std::string power_log, window;
  bench->add_option("--spec", spec_id, "Cipher spec id")->required();
  bench->add_option("--blocks", blocks, "Blocks per repetition")->capture_default_str();
  bench->add_option("--reps", reps, "Repetitions (median reported)")->capture_default_str();
  auto* power_opt = bench->add_option("--power-log", power_log, "Power log CSV (t_seconds,watts)");
  bench->add_option("--window", window, "Integration window t0,t1")->needs(power_opt);
  power_opt->needs(bench->get_option("--window"));
  bench->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Cryptanalysis tools");
  analyze->require_subcommand(1);
  std::string sbox = "present", table_format = "csv";
  auto* ddt = analyze->add_subcommand("ddt", "Difference distribution table");
  auto* lat = analyze->add_subcommand("lat", "Linear approximation table");
  for (auto* sub : {ddt, lat}) {
    sub->add_option("--sbox", sbox, "'present' or 16 hex digits")->capture_default_str();
    sub->add_option("--format", table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  }
  auto* avalanche = analyze->add_subcommand("avalanche", "Avalanche statistics");
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  avalanche->add_option("--spec", spec_id, "Cipher spec id")->required();
  avalanche->add_option("--trials", trials, "Number of trials")->capture_default_str();
  avalanche->add_option("--seed", seed, "RNG seed")->capture_default_str();
  auto* trail = analyze->add_subcommand("trail", "Best differential or linear trail");
  std::string model_name, kind_name = "differential";
  unsigned rounds = 1;
  double bound = -32;
  trail->add_option("--model", model_name, "present, simon32 or toy-feistel16")->required();
  trail->add_option("--rounds", rounds, "Rounds")->required();
  trail->add_option("--bound", bound, "log2 probability/correlation bound (<= 0)")->capture_default_str();
  trail->add_option("--kind", kind_name, "differential or linear")
      ->check(CLI::IsMember({"differential", "linear"}))
      ->capture_default_str();

  auto* mac = app.add_subcommand("mac", "CMAC tag and verify");
  mac->require_subcommand(1);
  auto* mac_tag = mac->add_subcommand("tag", "Compute a tag");
  auto* mac_verify = mac->add_subcommand("verify", "Verify a tag");
  for (auto* sub : {mac_tag, mac_verify}) {
    sub->add_option("--spec", spec_id, "Cipher spec id")->required();
    sub->add_option("--key", key_hex, "Key as hex")->required();
    sub->add_option("--in", input, "Message hex or file")->required();
  }
  mac_verify->add_option("--tag", tag_hex, "Expected tag as hex")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& id : registered_specs()) out << id << '\n';
    } else if (encrypt->parsed() || decrypt->parsed()) {
      const auto ctx = make_cipher(spec_id, parse_hex(key_hex));
      print_blocks(ctx, read_input(input), encrypt->parsed(), out);
    } else if (kat_run->parsed()) {
      const auto summary = run_kat(std::filesystem::path(kat_file));
      if (kat_json) {
        Json failures = Json::array();
        for (const auto& f : summary.failures) {
          failures.push_back({{"line", f.line}, {"spec_id", f.spec_id}, {"expected", f.expected}, {"got", f.got}});
        }
        Json j;
        j["passed"] = summary.passed;
        j["failed"] = summary.failed;
        j["failures"] = failures;
        out << j.dump(2) << '\n';
      } else {
        for (const auto& f : summary.failures) {
          out << paint(options, "FAIL", false) << " line " << f.line << ' ' << f.spec_id << ": expected "
              << f.expected << ", got " << f.got << '\n';
        }
        out << paint(options, summary.ok() ? "PASS" : "FAIL", summary.ok()) << " passed=" << summary.passed
            << " failed=" << summary.failed << '\n';
      }
      return summary.ok() ? 0 : 1;
    } else if (bench->parsed()) {
      if (blocks == 0 || reps < 3) throw UsageError("--blocks must be >= 1 and --reps >= 3");
      std::optional<std::pair<double, double>> win;
      if (!power_log.empty()) win = parse_window(window);
      const auto spec = lookup_spec(spec_id);
      const auto ctx = make_cipher(spec_id, Bytes(spec.key_bytes(), 0));
      auto report = measure_throughput(ctx, blocks, reps);
      if (win) attach_energy(report, ingest_power_log(std::filesystem::path(power_log)), win->first, win->second);
      if (format == "csv") {
        out << csv_header() << '\n' << to_csv_row(report) << '\n';
      } else {
        out << to_json(report) << '\n';
      }
    } else if (ddt->parsed() || lat->parsed()) {
      const auto s = sbox_by_name(sbox);
      print_table(ddt->parsed() ? compute_ddt(s) : compute_lat(s), table_format, out);
    } else if (avalanche->parsed()) {
      const auto spec = lookup_spec(spec_id);
      const auto stats = avalanche_test(make_cipher(spec_id, Bytes(spec.key_bytes(), 0)), trials, seed);
      Json j;
      j["spec_id"] = stats.spec_id;
      j["trials"] = stats.trials;
      j["seed"] = stats.seed;
      j["mean_flip_ratio"] = stats.mean_flip_ratio;
      j["bit_flip_frequency"] = stats.bit_flip_frequency;
      out << j.dump(2) << '\n';
    } else if (trail->parsed()) {
      const auto model = make_trail_model(model_name);
      const auto result = kind_name == "linear" ? search_linear_trail(*model, rounds, bound)
                                                : search_differential_trail(*model, rounds, bound);
      out << trail_json(result, model->state_bits(), bound).dump(2) << '\n';
    } else if (mac_tag->parsed() || mac_verify->parsed()) {
      const MacContext ctx(make_cipher(spec_id, parse_hex(key_hex)));
      const Bytes message = read_input(input);
      if (mac_tag->parsed()) {
        out << block_to_hex(cmac_tag(ctx, message)) << '\n';
      } else {
        const bool ok = cmac_verify(ctx, message, parse_hex(tag_hex));
        out << paint(options, ok ? "OK" : "FAIL", ok) << '\n';
        return ok ? 0 : 1;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e) ? 2 : 1;
  }
  return 0;
}

}  // namespace lwc::cli
