#pragma once

#include <vector>

#include "prescient/core.hpp"
#include "prescient/hypotheses.hpp"

namespace prescient {

enum class OfflineMode { RealizableHalving, AgnosticRewa };

// Closed-form nondecreasing concave bound in the horizon T.
struct BoundFn {
  enum class Kind { Constant, LogT, SqrtTLogT };
  Kind kind = Kind::Constant;
  double coeff = 0.0;

  double eval(double T) const;
  std::string str() const;
};

// Mistake / regret bound of the offline learner built for H.
BoundFn offline_bound(const HypothesisClass& H, OfflineMode mode);

// A learner initialized with the full example sequence before the game.
// Realizable mode runs halving over the behaviors of H on that sequence;
// agnostic mode runs exponential weights over them with rate
// sqrt(8 ln N / T'). Queries are answered strictly at the cursor, in order,
// against the initializing sequence; positions whose example cannot be
// evaluated by H (stray predictions outside a finite table's domain) are
// carried as dead columns and must never be queried.
class OfflineLearner {
 public:
  OfflineLearner(const HypothesisClass& H, std::vector<Example> xs,
                 OfflineMode mode);

  int horizon() const { return static_cast<int>(seq_.size()); }
  int cursor() const { return cursor_; }
  const Example& current() const { return seq_[cursor_ - 1]; }
  bool current_evaluable() const { return pos_col_[cursor_ - 1] >= 0; }
  int label_count() const { return label_count_; }
  int surviving() const;
  double rate() const { return eta_; }

  std::vector<double> predict() const;
  void update(Label y);

 private:
  std::vector<Example> seq_;
  std::vector<std::vector<Label>> rows_;
  std::vector<int> pos_col_;  // position -> column, -1 when dead
  std::vector<char> alive_;   // halving
  std::vector<double> logw_;  // exponential weights
  double eta_ = 0.0;
  OfflineMode mode_;
  int label_count_ = 2;
  int cursor_ = 1;
};

// Minimum cumulative 0-1 loss of H over the stream, exact by enumeration of
// the projected behaviors.
long best_in_hindsight(const HypothesisClass& H, const LabeledStream& stream);

}  // namespace prescient
