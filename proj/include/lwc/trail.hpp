#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lwc/words.hpp"

namespace lwc {

enum class TrailKind { differential, linear };

std::string_view trail_kind_name(TrailKind k) noexcept;

/// One round-level propagation step. Weight is -log2 of the transition
/// probability (differential) or of the absolute correlation (linear).
struct Transition {
  uint128 output;
  int weight;
};

/// Feeds first-round candidates to the search. budget() is the largest
/// admissible first-round weight; when chained is set, candidates must also
/// satisfy weight + min_weight(output) <= chained_budget(). Both may shrink
/// while enumeration is in progress.
struct FirstRoundSink {
  std::function<int()> budget;
  bool chained = false;
  std::function<int()> chained_budget;
  std::function<void(uint128 input, uint128 output, int weight)> emit;
};

/// Keyless round-transition model of a cipher, with integral weights.
class RoundModel {
 public:
  virtual ~RoundModel() = default;

  virtual std::string name() const = 0;
  virtual unsigned state_bits() const = 0;

  /// All transitions from `input` with weight <= max_weight, sorted by
  /// (weight, output).
  virtual std::vector<Transition> transitions(TrailKind kind, uint128 input,
                                              int max_weight) const = 0;

  /// Exact minimum transition weight from `input`.
  virtual int min_weight(TrailKind kind, uint128 input) const = 0;

  /// Every (input != 0, output) pair admitted by the sink. The default walks
  /// all inputs and is only usable for states of at most 24 bits.
  virtual void first_round(TrailKind kind, const FirstRoundSink& sink) const;
};

/// Bundled models: "present", "simon32", "toy-feistel16".
std::vector<std::string> trail_model_names();
/// Throws InvalidArgument for an unknown name.
std::unique_ptr<RoundModel> make_trail_model(std::string_view name);

struct TrailResult {
  TrailKind kind;
  std::string model;
  unsigned rounds;
  /// Largest admissible total weight derived from the caller's bound.
  int weight_cap;
  /// False means BoundTooTight: no trail reaches the bound.
  bool found;
  /// rounds + 1 differences (or masks), input first.
  std::vector<uint128> states;
  std::vector<int> round_weights;
  int weight;
  std::uint64_t nodes;

  /// log2 of the trail probability / absolute correlation (= -weight).
  double log2_value() const noexcept { return -static_cast<double>(weight); }
};

/// Matsui-style branch and bound. Returns the trail of minimal weight among
/// those with log2 probability >= log2_bound; ties resolve to the
/// lexicographically smallest state vector. Throws InvalidArgument for
/// rounds == 0 or a positive bound.
TrailResult search_differential_trail(const RoundModel& model, unsigned rounds, double log2_bound);
/// Same search over linear masks; the bound applies to log2 |correlation|.
TrailResult search_linear_trail(const RoundModel& model, unsigned rounds,
                                double log2_correlation_bound);

}  // namespace lwc
