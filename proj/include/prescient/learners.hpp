#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "prescient/aggregate.hpp"
#include "prescient/core.hpp"
#include "prescient/hypotheses.hpp"
#include "prescient/offline.hpp"

namespace prescient {

// An online learner as an init/predict/update state machine. Each round it
// receives the current example together with the predictor's full length-T
// prediction (whose prefix matches the observed stream) and emits a label
// distribution; deterministic learners emit point masses.
class OnlineLearner {
 public:
  virtual ~OnlineLearner() = default;
  virtual std::vector<double> predict(const Example& x,
                                      std::span<const Example> predicted) = 0;
  virtual void update(Label y) = 0;
  virtual int label_count() const = 0;
};

// Standard optimal algorithm over an explicit finite table: predict the
// label whose consistent restriction keeps the largest Littlestone
// dimension. Ignores the predictor entirely.
class SoaLearner final : public OnlineLearner {
 public:
  explicit SoaLearner(std::shared_ptr<const FiniteTable> table);
  std::vector<double> predict(const Example& x,
                              std::span<const Example> predicted) override;
  void update(Label y) override;
  int label_count() const override { return oracle_.table().label_count; }
  int surviving() const;

 private:
  LdimOracle oracle_;
  std::uint64_t alive_;
  int last_col_ = -1;
};

// Start a fresh offline learner whenever the predictor errs, seeding it with
// the current predicted suffix, and play its answers until the next error.
class RestartLearner final : public OnlineLearner {
 public:
  RestartLearner(HypothesisClass H, int horizon, OfflineMode mode);
  std::vector<double> predict(const Example& x,
                              std::span<const Example> predicted) override;
  void update(Label y) override;
  int label_count() const override { return H_.label_count(); }
  // Always 1 + (predictor mistakes seen so far).
  int instances() const { return instances_; }

 private:
  HypothesisClass H_;
  int horizon_;
  OfflineMode mode_;
  std::unique_ptr<OfflineLearner> active_;
  std::vector<Example> prev_pred_;
  int instances_ = 0;
  int t_ = 0;
};

// Partition the horizon into c+1 blocks of size ceil(T/(c+1)) and run a
// fresh restart learner per block, capping the offline horizons.
class ExpertLearner final : public OnlineLearner {
 public:
  ExpertLearner(HypothesisClass H, int horizon, int c, OfflineMode mode);
  std::vector<double> predict(const Example& x,
                              std::span<const Example> predicted) override;
  void update(Label y) override;
  int label_count() const override { return H_.label_count(); }
  int parameter() const { return c_; }

 private:
  HypothesisClass H_;
  int horizon_;
  int c_;
  int block_;
  OfflineMode mode_;
  std::unique_ptr<RestartLearner> inner_;
  int t_ = 0;
};

// Aggregate the whole expert family {Expert(c)}_{c=0..T-1}: deterministic
// weighted majority in realizable mode, exponential weights in agnostic
// mode.
class MetaLearner final : public OnlineLearner {
 public:
  MetaLearner(HypothesisClass H, int horizon, OfflineMode mode);
  std::vector<double> predict(const Example& x,
                              std::span<const Example> predicted) override;
  void update(Label y) override;
  int label_count() const override { return H_.label_count(); }

 private:
  HypothesisClass H_;
  OfflineMode mode_;
  std::vector<std::unique_ptr<ExpertLearner>> experts_;
  std::unique_ptr<Dwma> dwma_;
  std::unique_ptr<Rewa> rewa_;
  std::vector<Label> advice_;                      // realizable
  std::vector<std::vector<double>> expert_dists_;  // agnostic
};

// Weighted majority over {SOA when available, restart, meta}. The SOA slot
// is present only for finite tables within the brute-force guards.
class CombinedRealizableLearner final : public OnlineLearner {
 public:
  CombinedRealizableLearner(HypothesisClass H, int horizon);
  std::vector<double> predict(const Example& x,
                              std::span<const Example> predicted) override;
  void update(Label y) override;
  int label_count() const override { return H_.label_count(); }
  bool has_soa_slot() const { return has_soa_; }

 private:
  HypothesisClass H_;
  bool has_soa_ = false;
  std::vector<std::unique_ptr<OnlineLearner>> experts_;
  Dwma dwma_;
  std::vector<Label> advice_;
};

// Exponential weights over {finite-class baseline, agnostic meta}. The
// baseline plays exponential weights directly over the table rows, or, for
// thresholds, over the canonical representatives of the class projected on
// the first round's predicted sequence.
class CombinedAgnosticLearner final : public OnlineLearner {
 public:
  CombinedAgnosticLearner(HypothesisClass H, int horizon);
  std::vector<double> predict(const Example& x,
                              std::span<const Example> predicted) override;
  void update(Label y) override;
  int label_count() const override { return H_.label_count(); }

 private:
  HypothesisClass H_;
  std::vector<std::unique_ptr<OnlineLearner>> experts_;
  Rewa rewa_;
  std::vector<std::vector<double>> expert_dists_;
};

// SOA run on the threshold class projected onto the currently predicted
// window (the maximal non-star segment from the current round onward),
// carrying the interval version space across rounds. Window sizes must stay
// within the Littlestone brute-force guard.
class SoaProjectionLearner final : public OnlineLearner {
 public:
  explicit SoaProjectionLearner(HypothesisClass H);
  std::vector<double> predict(const Example& x,
                              std::span<const Example> predicted) override;
  void update(Label y) override;
  int label_count() const override { return 2; }

 private:
  VersionSpace version_;
  Example last_x_;
  int t_ = 0;
};

// "soa" | "soa-projection" | "restart" | "expert:<c>" | "meta" | "combined"
// | "combined-agnostic".
std::unique_ptr<OnlineLearner> make_learner(const std::string& spec,
                                            const HypothesisClass& H,
                                            int horizon, OfflineMode mode);

}  // namespace prescient
