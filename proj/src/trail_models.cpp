#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <functional>
#include <memory>
#include <numeric>
#include <string>

#include "gf2.hpp"
#include "lwc/analysis.hpp"
#include "lwc/error.hpp"
#include "lwc/feistel.hpp"
#include "lwc/present.hpp"
#include "lwc/trail.hpp"

namespace lwc {

namespace {

struct WeightedValue {
  std::uint64_t value;
  int weight;
};

bool by_weight_then_value(const WeightedValue& a, const WeightedValue& b) {
  return a.weight != b.weight ? a.weight < b.weight : a.value < b.value;
}

int exact_log2(int v) {
  if (v <= 0 || !std::has_single_bit(static_cast<unsigned>(v))) {
    throw InvalidArgument("trail models need power-of-two table entries");
  }
  return std::countr_zero(static_cast<unsigned>(v));
}

/// Per-S-box transition lists derived from its DDT and LAT.
class SboxTransitions {
 public:
  explicit SboxTransitions(std::span<const std::uint8_t> sbox) {
    const auto ddt = compute_ddt(sbox);
    const auto lat = compute_lat(sbox);
    if (!ddt.bijective) throw InvalidArgument("trail models need a bijective S-box");
    n_ = ddt.n;
    const std::size_t size = ddt.size();
    diff_.resize(size);
    lin_forward_.resize(size);
    lin_backward_.resize(size);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        if (const int d = ddt.at(a, b); d != 0) {
          diff_[a].push_back({b, static_cast<int>(n_) - exact_log2(d)});
        }
        if (const int l = std::abs(lat.at(a, b)); l != 0) {
          const int w = static_cast<int>(n_) - 1 - exact_log2(l);
          lin_forward_[a].push_back({b, w});
          lin_backward_[b].push_back({a, w});
        }
      }
    }
    for (auto* lists : {&diff_, &lin_forward_, &lin_backward_}) {
      for (auto& l : *lists) std::sort(l.begin(), l.end(), by_weight_then_value);
    }
  }

  unsigned bits() const noexcept { return n_; }
  /// Input difference -> output differences.
  const std::vector<WeightedValue>& diff(std::uint64_t a) const { return diff_[a]; }
  /// Input mask -> output masks.
  const std::vector<WeightedValue>& lin_forward(std::uint64_t a) const { return lin_forward_[a]; }
  /// Output mask -> input masks.
  const std::vector<WeightedValue>& lin_backward(std::uint64_t b) const { return lin_backward_[b]; }

 private:
  unsigned n_ = 0;
  std::vector<std::vector<WeightedValue>> diff_, lin_forward_, lin_backward_;
};

using ListFor = std::function<const std::vector<WeightedValue>&(std::uint64_t)>;

/// Cartesian product over the cells of a bricklayer S-box layer, keeping
/// combinations of total weight <= max_weight.
std::vector<WeightedValue> bricklayer(std::uint64_t input, unsigned cells, unsigned cell_bits,
                                      const ListFor& list_for, int max_weight) {
  std::vector<WeightedValue> out;
  if (max_weight < 0) return out;
  const std::uint64_t cell_mask = (std::uint64_t{1} << cell_bits) - 1;
  struct Active {
    unsigned shift;
    const std::vector<WeightedValue>* list;
  };
  std::vector<Active> active;
  int floor_weight = 0;
  for (unsigned i = 0; i < cells; ++i) {
    const std::uint64_t v = (input >> (i * cell_bits)) & cell_mask;
    if (v == 0) continue;
    const auto& l = list_for(v);
    if (l.empty()) return out;
    active.push_back({i * cell_bits, &l});
    floor_weight += l.front().weight;
  }
  if (floor_weight > max_weight) return out;

  // Suffix minima let the recursion stop as soon as the budget is exceeded.
  std::vector<int> rest(active.size() + 1, 0);
  for (std::size_t i = active.size(); i-- > 0;) rest[i] = rest[i + 1] + active[i].list->front().weight;

  auto recurse = [&](auto&& self, std::size_t i, std::uint64_t acc, int w) -> void {
    if (i == active.size()) {
      out.push_back({acc, w});
      return;
    }
    for (const auto& t : *active[i].list) {
      if (w + t.weight + rest[i + 1] > max_weight) break;
      self(self, i + 1, acc | (t.value << active[i].shift), w + t.weight);
    }
  };
  recurse(recurse, 0, 0, 0);
  return out;
}

int bricklayer_min(std::uint64_t input, unsigned cells, unsigned cell_bits, const ListFor& list_for) {
  const std::uint64_t cell_mask = (std::uint64_t{1} << cell_bits) - 1;
  int w = 0;
  for (unsigned i = 0; i < cells; ++i) {
    const std::uint64_t v = (input >> (i * cell_bits)) & cell_mask;
    if (v != 0) w += list_for(v).front().weight;
  }
  return w;
}

std::vector<Transition> finish(std::vector<Transition> t) {
  std::sort(t.begin(), t.end(), [](const Transition& a, const Transition& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.output < b.output;
  });
  return t;
}

// ---------------------------------------------------------------------------
// PRESENT: sixteen 4-bit S-boxes followed by the bit permutation.

class PresentModel final : public RoundModel {
 public:
  PresentModel() : sbox_(present::kSbox) {
    for (std::uint64_t a = 1; a < 16; ++a) {
      for (const auto& t : sbox_.diff(a)) diff_pairs_.push_back({a, t.value, t.weight});
      for (const auto& t : sbox_.lin_forward(a)) lin_pairs_.push_back({a, t.value, t.weight});
    }
    for (auto* pairs : {&diff_pairs_, &lin_pairs_}) {
      std::stable_sort(pairs->begin(), pairs->end(),
                       [](const Pair& x, const Pair& y) { return x.weight < y.weight; });
    }
  }

  std::string name() const override { return "present"; }
  unsigned state_bits() const override { return 64; }

  std::vector<Transition> transitions(TrailKind kind, uint128 input, int max_weight) const override {
    std::vector<Transition> out;
    for (const auto& v : bricklayer(static_cast<std::uint64_t>(input), 16, 4, list_for(kind), max_weight)) {
      out.push_back({present::player(v.value), v.weight});
    }
    return finish(std::move(out));
  }

  int min_weight(TrailKind kind, uint128 input) const override {
    return bricklayer_min(static_cast<std::uint64_t>(input), 16, 4, list_for(kind));
  }

  void first_round(TrailKind kind, const FirstRoundSink& sink) const override {
    const auto& pairs = kind == TrailKind::differential ? diff_pairs_ : lin_pairs_;
    auto recurse = [&](auto&& self, unsigned cell, std::uint64_t in, std::uint64_t out, int w) -> void {
      if (cell == 16) {
        if (in == 0) return;
        const std::uint64_t permuted = present::player(out);
        if (sink.chained && w + min_weight(kind, permuted) > sink.chained_budget()) return;
        sink.emit(in, permuted, w);
        return;
      }
      self(self, cell + 1, in, out, w);
      for (const auto& p : pairs) {
        if (w + p.weight > sink.budget()) break;
        self(self, cell + 1, in | (p.in << (4 * cell)), out | (p.out << (4 * cell)), w + p.weight);
      }
    };
    recurse(recurse, 0, 0, 0, 0);
  }

 private:
  struct Pair {
    std::uint64_t in, out;
    int weight;
  };

  ListFor list_for(TrailKind kind) const {
    if (kind == TrailKind::differential) {
      return [this](std::uint64_t a) -> const std::vector<WeightedValue>& { return sbox_.diff(a); };
    }
    return [this](std::uint64_t a) -> const std::vector<WeightedValue>& { return sbox_.lin_forward(a); };
  }

  SboxTransitions sbox_;
  std::vector<Pair> diff_pairs_, lin_pairs_;
};

// ---------------------------------------------------------------------------
// Keyless round functions of Feistel models.

class WordFunction {
 public:
  virtual ~WordFunction() = default;
  virtual unsigned bits() const = 0;
  /// Input difference -> output differences.
  virtual std::vector<WeightedValue> diff(std::uint64_t alpha, int max_weight) const = 0;
  /// Output mask -> input masks.
  virtual std::vector<WeightedValue> lin(std::uint64_t beta, int max_weight) const = 0;
  virtual int diff_min(std::uint64_t alpha) const = 0;
  virtual int lin_min(std::uint64_t beta) const = 0;
};

/// f(x) = (rotl(x, a) & rotl(x, b)) ^ rotl(x, c). Differences through the
/// AND form an affine space whose dimension is the weight; linear
/// approximations follow from the quadratic form beta . f.
class AndRotateFunction final : public WordFunction {
 public:
  AndRotateFunction(unsigned n, unsigned a, unsigned b, unsigned c) : n_(n), a_(a), b_(b), c_(c) {}

  unsigned bits() const override { return n_; }

  std::vector<WeightedValue> diff(std::uint64_t alpha, int max_weight) const override {
    gf2::Basis span;
    const std::uint64_t offset = diff_space(alpha, span);
    const int w = static_cast<int>(span.rank());
    std::vector<WeightedValue> out;
    if (w > max_weight) return out;
    for (auto v : span.affine_elements(offset)) out.push_back({v, w});
    std::sort(out.begin(), out.end(), by_weight_then_value);
    return out;
  }

  int diff_min(std::uint64_t alpha) const override {
    gf2::Basis span;
    diff_space(alpha, span);
    return static_cast<int>(span.rank());
  }

  std::vector<WeightedValue> lin(std::uint64_t beta, int max_weight) const override {
    std::vector<WeightedValue> out;
    const auto rows = form_rows(beta);
    gf2::Basis image;
    for (auto r : rows) image.insert(r);
    const int w = static_cast<int>(image.rank() / 2);
    if (w > max_weight) return out;

    // gamma' = gamma ^ rotr(beta, c) must agree with the quadratic part on
    // the radical of its bilinear form.
    const auto radical = gf2::nullspace(rows, n_);
    std::vector<int> rhs;
    for (auto d : radical) rhs.push_back(quadratic(beta, d));
    const auto particular = gf2::solve(radical, rhs);
    if (!particular) return out;
    const std::uint64_t linear = rotr_bits(beta, c_, n_);
    for (auto v : image.affine_elements(*particular)) out.push_back({v ^ linear, w});
    std::sort(out.begin(), out.end(), by_weight_then_value);
    return out;
  }

  int lin_min(std::uint64_t beta) const override {
    gf2::Basis image;
    for (auto r : form_rows(beta)) image.insert(r);
    return static_cast<int>(image.rank() / 2);
  }

 private:
  std::uint64_t diff_space(std::uint64_t alpha, gf2::Basis& span) const {
    const std::uint64_t ra = rotl_bits(alpha, a_, n_);
    const std::uint64_t rb = rotl_bits(alpha, b_, n_);
    for (unsigned j = 0; j < n_; ++j) {
      const std::uint64_t e = std::uint64_t{1} << j;
      span.insert((rotl_bits(e, a_, n_) & rb) ^ (ra & rotl_bits(e, b_, n_)));
    }
    return (ra & rb) ^ rotl_bits(alpha, c_, n_);
  }

  // Rows of the symmetric matrix of the bilinear form of beta . (S^a x & S^b x).
  std::vector<std::uint64_t> form_rows(std::uint64_t beta) const {
    std::vector<std::uint64_t> rows(n_, 0);
    for (unsigned i = 0; i < n_; ++i) {
      if (((beta >> i) & 1U) == 0) continue;
      const unsigned j = (i + n_ - a_ % n_) % n_;
      const unsigned k = (i + n_ - b_ % n_) % n_;
      if (j == k) continue;
      rows[j] ^= std::uint64_t{1} << k;
      rows[k] ^= std::uint64_t{1} << j;
    }
    return rows;
  }

  int quadratic(std::uint64_t beta, std::uint64_t x) const {
    return gf2::parity(beta & rotl_bits(x, a_, n_) & rotl_bits(x, b_, n_));
  }

  unsigned n_, a_, b_, c_;
};

/// f(x) = rotl(S(x), rotation) with a 4-bit S-box on every nibble.
class SboxRotateFunction final : public WordFunction {
 public:
  SboxRotateFunction(std::span<const std::uint8_t> sbox, unsigned n, unsigned rotation)
      : sbox_(sbox), n_(n), rotation_(rotation) {}

  unsigned bits() const override { return n_; }

  std::vector<WeightedValue> diff(std::uint64_t alpha, int max_weight) const override {
    auto out = bricklayer(alpha, n_ / 4, 4, diff_list(), max_weight);
    for (auto& v : out) v.value = rotl_bits(v.value, rotation_, n_);
    std::sort(out.begin(), out.end(), by_weight_then_value);
    return out;
  }

  int diff_min(std::uint64_t alpha) const override { return bricklayer_min(alpha, n_ / 4, 4, diff_list()); }

  std::vector<WeightedValue> lin(std::uint64_t beta, int max_weight) const override {
    auto out = bricklayer(rotr_bits(beta, rotation_, n_), n_ / 4, 4, lin_list(), max_weight);
    std::sort(out.begin(), out.end(), by_weight_then_value);
    return out;
  }

  int lin_min(std::uint64_t beta) const override {
    return bricklayer_min(rotr_bits(beta, rotation_, n_), n_ / 4, 4, lin_list());
  }

 private:
  ListFor diff_list() const {
    return [this](std::uint64_t a) -> const std::vector<WeightedValue>& { return sbox_.diff(a); };
  }
  ListFor lin_list() const {
    return [this](std::uint64_t b) -> const std::vector<WeightedValue>& { return sbox_.lin_backward(b); };
  }

  SboxTransitions sbox_;
  unsigned n_, rotation_;
};

// ---------------------------------------------------------------------------
// Balanced Feistel round (L, R) -> (R, L ^ F(R)). With swapped set the
// native state is (R, L), which describes SIMON's (x, y) -> (y ^ f(x), x).

class FeistelModel final : public RoundModel {
 public:
  FeistelModel(std::string name, std::unique_ptr<WordFunction> f, bool swapped)
      : name_(std::move(name)), f_(std::move(f)), swapped_(swapped), n_(f_->bits()) {
    if (n_ > 16) throw InvalidArgument("Feistel trail models support words of at most 16 bits");
    const std::size_t size = std::size_t{1} << n_;
    diff_min_.resize(size);
    lin_min_.resize(size);
    for (std::uint64_t v = 0; v < size; ++v) {
      diff_min_[v] = f_->diff_min(v);
      lin_min_[v] = f_->lin_min(v);
    }
    by_diff_min_ = sorted_by(diff_min_);
    by_lin_min_ = sorted_by(lin_min_);
  }

  std::string name() const override { return name_; }
  unsigned state_bits() const override { return 2 * n_; }

  std::vector<Transition> transitions(TrailKind kind, uint128 input, int max_weight) const override {
    const auto [l, r] = split(native_to_kit(input));
    std::vector<Transition> out;
    if (kind == TrailKind::differential) {
      for (const auto& g : f_->diff(r, max_weight)) out.push_back({kit_to_native(join(r, l ^ g.value)), g.weight});
    } else {
      for (const auto& g : f_->lin(l, max_weight)) out.push_back({kit_to_native(join(r ^ g.value, l)), g.weight});
    }
    return finish(std::move(out));
  }

  int min_weight(TrailKind kind, uint128 input) const override {
    const auto [l, r] = split(native_to_kit(input));
    return kind == TrailKind::differential ? diff_min_[r] : lin_min_[l];
  }

  void first_round(TrailKind kind, const FirstRoundSink& sink) const override {
    const bool differential = kind == TrailKind::differential;
    const auto& mins = differential ? diff_min_ : lin_min_;
    const auto& order = differential ? by_diff_min_ : by_lin_min_;
    // The half feeding F this round is `driver`; the half feeding F next round
    // (`next`) is free once the transition through F is fixed.
    for (const auto driver : order) {
      if (mins[driver] > sink.budget()) break;
      const auto through = differential ? f_->diff(driver, sink.budget()) : f_->lin(driver, sink.budget());
      for (const auto& g : through) {
        if (g.weight > sink.budget()) break;
        for (const auto next : order) {
          if (sink.chained && g.weight + mins[next] > sink.chained_budget()) break;
          // differential: in = (next ^ g, driver), out = (driver, next)
          // linear:       in = (driver, next ^ g), out = (next, driver)
          const std::uint64_t other = next ^ g.value;
          const uint128 in = differential ? join(other, driver) : join(driver, other);
          if (in == 0) continue;
          const uint128 out = differential ? join(driver, next) : join(next, driver);
          sink.emit(kit_to_native(in), kit_to_native(out), g.weight);
        }
      }
    }
  }

 private:
  static std::vector<std::uint64_t> sorted_by(const std::vector<int>& key) {
    std::vector<std::uint64_t> order(key.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint64_t a, std::uint64_t b) { return key[a] < key[b]; });
    return order;
  }

  std::pair<std::uint64_t, std::uint64_t> split(uint128 s) const {
    return {static_cast<std::uint64_t>(s >> n_), static_cast<std::uint64_t>(s) & word_mask(n_)};
  }
  uint128 join(std::uint64_t l, std::uint64_t r) const { return (uint128{l} << n_) | r; }
  uint128 swap(uint128 s) const {
    const auto [l, r] = split(s);
    return join(r, l);
  }
  uint128 native_to_kit(uint128 s) const { return swapped_ ? swap(s) : s; }
  uint128 kit_to_native(uint128 s) const { return swapped_ ? swap(s) : s; }

  std::string name_;
  std::unique_ptr<WordFunction> f_;
  bool swapped_;
  unsigned n_;
  std::vector<int> diff_min_, lin_min_;
  std::vector<std::uint64_t> by_diff_min_, by_lin_min_;
};

}  // namespace

std::string_view trail_kind_name(TrailKind k) noexcept {
  return k == TrailKind::differential ? "differential" : "linear";
}

void RoundModel::first_round(TrailKind kind, const FirstRoundSink& sink) const {
  if (state_bits() > 24) throw InvalidArgument("default first-round enumeration needs <= 24 state bits");
  const uint128 end = uint128{1} << state_bits();
  for (uint128 in = 1; in < end; ++in) {
    for (const auto& t : transitions(kind, in, sink.budget())) {
      if (t.weight > sink.budget()) break;
      if (sink.chained && t.weight + min_weight(kind, t.output) > sink.chained_budget()) continue;
      sink.emit(in, t.output, t.weight);
    }
  }
}

std::vector<std::string> trail_model_names() { return {"present", "simon32", "toy-feistel16"}; }

std::unique_ptr<RoundModel> make_trail_model(std::string_view name) {
  if (name == "present") return std::make_unique<PresentModel>();
  if (name == "simon32") {
    return std::make_unique<FeistelModel>("simon32", std::make_unique<AndRotateFunction>(16, 1, 8, 2), true);
  }
  if (name == "toy-feistel16") {
    return std::make_unique<FeistelModel>(
        "toy-feistel16",
        std::make_unique<SboxRotateFunction>(present::kSbox, 8, feistel_examples::kToyRotation), false);
  }
  throw InvalidArgument("unknown trail model '" + std::string(name) + "'");
}

}  // namespace lwc
