#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prescient/adversary.hpp"
#include "prescient/core.hpp"
#include "prescient/hypotheses.hpp"
#include "prescient/learners.hpp"
#include "prescient/offline.hpp"

namespace prescient {

struct GameConfig {
  std::string class_kind = "threshold";  // "threshold" | "finite"
  FiniteTable finite;

  std::string predictor_kind = "perfect";  // + "static" | "corrupting" | "zn"
  std::vector<Example> static_seq;
  int corrupt_k = 0;
  int zn_n = 1;

  std::string learner_spec = "restart";

  // "explicit" | "random-realizable" | "agnostic-noise" | "nature-zn"
  std::string stream_kind = "random-realizable";
  LabeledStream explicit_stream;
  double noise_rate = 0.0;

  int T = 64;
  std::uint64_t seed = 1;
  int trials = 1;
  bool retain_full_predictions = false;
  std::string offline_mode;  // "" = realizable unless the stream is noisy

  static GameConfig from_json(const std::string& text);
  std::string canonical_json() const;
  std::uint64_t digest() const;
  void validate() const;

  HypothesisClass build_class() const;
  OfflineMode resolved_mode() const;
};

struct TrialResult {
  Transcript transcript;
  LabeledStream stream;
  double expected_mistakes = 0.0;
  long best_loss = 0;
  double regret = 0.0;
  int predictor_mistakes = 0;
  std::uint64_t trial_seed = 0;
};

struct RunReport {
  GameConfig cfg;
  std::vector<TrialResult> trials;
  double mean_mistakes = 0.0, se_mistakes = 0.0;
  double mean_regret = 0.0, se_regret = 0.0;
  double mean_predictor_mistakes = 0.0;
};

struct BoundRow {
  std::string name;
  double analytic = 0.0;
  double measured = 0.0;
  double se = 0.0;
  bool pass = false;
  bool asserted = true;  // informational rows never gate the exit code
};

struct BoundReport {
  std::vector<BoundRow> rows;
  bool all_pass() const;
};

// Protocol loop: reveal x_t, query the predictor, take the learner's label
// distribution, reveal y_t, update everyone; repeated over seeded trials.
RunReport run_game(const GameConfig& cfg);

// Analytic bound rows for the configured learner, compared against the
// measured means with a 3-standard-error slack.
BoundReport evaluate_bounds(const RunReport& report);

// Adversarial game for the configured learner plus the stream checks
// (generator membership, realizability, per-block shattering, predictor
// mistake schedule).
BoundReport run_lower_bound(const GameConfig& cfg);

struct SweepPoint {
  long axis_value = 0;
  double mean = 0.0;
  double se = 0.0;
  double bound = 0.0;
  double mean_over_T = 0.0;
};

struct SweepResult {
  std::string axis;
  std::vector<SweepPoint> points;
  bool sublinear = true;  // measured/T strictly decreasing (T axis only)
  std::string csv() const;
  std::string svg() const;
};

// axis is "k" (corruption budget) or "T" (horizon). couple_k_sqrt sets
// k = ceil(sqrt(T)) along a T axis.
SweepResult sweep(const GameConfig& base, const std::string& axis,
                  const std::vector<long>& values, bool couple_k_sqrt = false);

std::string transcript_csv(const RunReport& report);
std::string bounds_csv(const BoundReport& report);

}  // namespace prescient
