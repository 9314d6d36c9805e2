#include <algorithm>
#include <cmath>

#include "lwc/error.hpp"
#include "lwc/trail.hpp"

namespace lwc {

namespace {

/// Depth-first search over r-round trails using the best weights of shorter
/// trails as lower bounds for the remaining rounds.
class Searcher {
 public:
  Searcher(const RoundModel& model, TrailKind kind, unsigned rounds, const std::vector<int>& bounds, int cap)
      : model_(model), kind_(kind), rounds_(rounds), bounds_(bounds), best_(cap) {}

  void run() {
    FirstRoundSink sink;
    sink.budget = [this] { return best_ - bounds_[rounds_ - 1]; };
    sink.chained = rounds_ >= 2;
    sink.chained_budget = [this] { return best_ - bounds_[rounds_ - 2]; };
    sink.emit = [this](uint128 in, uint128 out, int w) {
      ++nodes_;
      states_.assign({in, out});
      weights_.assign({w});
      if (rounds_ == 1) {
        leaf(w);
      } else {
        descend(1, out, w);
      }
    };
    model_.first_round(kind_, sink);
  }

  bool found() const noexcept { return found_; }
  int best() const noexcept { return best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<uint128>& best_states() const noexcept { return best_states_; }
  const std::vector<int>& best_weights() const noexcept { return best_weights_; }

 private:
  void descend(unsigned done, uint128 state, int w) {
    const unsigned remaining = rounds_ - done;
    const int after = bounds_[remaining - 1];
    if (w + std::max(bounds_[remaining], model_.min_weight(kind_, state) + after) > best_) return;
    for (const auto& t : model_.transitions(kind_, state, best_ - w - after)) {
      if (w + t.weight + after > best_) break;
      ++nodes_;
      states_.push_back(t.output);
      weights_.push_back(t.weight);
      if (remaining == 1) {
        leaf(w + t.weight);
      } else {
        descend(done + 1, t.output, w + t.weight);
      }
      states_.pop_back();
      weights_.pop_back();
    }
  }

  void leaf(int total) {
    if (total > best_) return;
    if (found_ && total == best_ &&
        !std::lexicographical_compare(states_.begin(), states_.end(), best_states_.begin(), best_states_.end())) {
      return;
    }
    found_ = true;
    best_ = total;
    best_states_ = states_;
    best_weights_ = weights_;
  }

  const RoundModel& model_;
  TrailKind kind_;
  unsigned rounds_;
  const std::vector<int>& bounds_;
  int best_;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<uint128> states_, best_states_;
  std::vector<int> weights_, best_weights_;
};

TrailResult search(const RoundModel& model, TrailKind kind, unsigned rounds, double log2_bound) {
  if (rounds == 0) throw InvalidArgument("trail search needs rounds >= 1");
  if (!(log2_bound <= 0.0) || !std::isfinite(log2_bound)) {
    throw InvalidArgument("trail search bound must be a finite log2 value <= 0");
  }
  // Weights are integers, so -log2 p <= -bound is the same as w <= floor(-bound).
  const int cap = static_cast<int>(std::floor(-log2_bound + 1e-9));

  TrailResult result{kind, model.name(), rounds, cap, false, {}, {}, 0, 0};
  std::vector<int> bounds{0};
  for (unsigned r = 1; r <= rounds; ++r) {
    // Raise the cap one step at a time from a known lower bound; the first
    // cap that admits a trail is the optimum, and every search stays tight.
    const int floor_weight = r == 1 ? 0 : bounds[r - 1] + bounds[1];
    bool found = false;
    for (int c = floor_weight; c <= cap && !found; ++c) {
      Searcher s(model, kind, r, bounds, c);
      s.run();
      result.nodes += s.nodes();
      if (!s.found()) continue;
      found = true;
      bounds.push_back(s.best());
      if (r == rounds) {
        result.found = true;
        result.weight = s.best();
        result.states = s.best_states();
        result.round_weights = s.best_weights();
      }
    }
    if (!found) return result;
  }
  return result;
}

}  // namespace

TrailResult search_differential_trail(const RoundModel& model, unsigned rounds, double log2_bound) {
  return search(model, TrailKind::differential, rounds, log2_bound);
}

TrailResult search_linear_trail(const RoundModel& model, unsigned rounds, double log2_correlation_bound) {
  return search(model, TrailKind::linear, rounds, log2_correlation_bound);
}

}  // namespace lwc
