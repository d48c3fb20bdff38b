#pragma once

#include <memory>
#include <span>
#include <vector>

#include "prescient/core.hpp"
#include "prescient/hypotheses.hpp"
#include "prescient/learners.hpp"
#include "prescient/predictors.hpp"

namespace prescient {

// m evenly spaced exact rationals strictly inside (a, b).
std::vector<Rat> f_even(const Rat& a, const Rat& b, int m);

// Midpoint-first permutation of 0..n-1; n+1 must be a power of two. Level j
// emits the indices i*(n+1)/2^j for odd i, so each element bisects a
// remaining dyadic gap.
std::vector<int> dyadic_indices(int n);
std::vector<Rat> dyadic_order(std::span<const Rat> sorted);

struct ZnParams {
  int T = 0;
  int n = 0;

  int block() const { return T / (n + 1); }
  // Requires (n+1) | T and block+1 a power of two.
  static ZnParams create(int T, int n);
  std::vector<Rat> initial_block() const;  // f_even(0, 1, block)
};

// One refinement level of the nested-interval stream construction.
struct StreamLevels {
  std::vector<std::vector<Rat>> levels;       // S^0..S^m, each sorted
  std::vector<std::pair<Rat, Rat>> brackets;  // (a_i, b_i) per level
  std::vector<Rat> flat;                      // Dyd(S^0) o ... o Dyd(S^m)
  std::vector<Example> examples() const;
};

// Deterministic generator: S^i subdivides the gap of S^{i-1} selected by
// j_i (1-based; block+1 means the gap above the last element).
StreamLevels stream_gen(const ZnParams& params, std::span<const int> js);

// The block-boundary predictor: starts from the initial block, recovers the
// refinement index at each boundary from the sorted previous block and the
// boundary example, and star-pads the unknown future.
std::unique_ptr<ExamplePredictor> make_zn_predictor(const ZnParams& params);

// One step of Nature's offline strategy: given the learner's probability of
// label 1, pick the label that forces expected loss whenever the version
// space allows it. Caller restricts the version space afterwards.
Label nature_offline_step(double p1, const VersionSpace& V, const Example& x);

// (n+1)/2 * log2(T/(n+1)).
double lower_bound_value(const ZnParams& params);

struct PeeksResult {
  LabeledStream stream;
  Transcript transcript;
  double forced_expected_mistakes = 0.0;
  std::vector<int> indices;              // j_1..j_n
  std::vector<VersionSpace> entering;    // version space entering each block
  VersionSpace final_version;
  std::vector<int> predictor_mistake_rounds;

  PeeksResult() : final_version(VersionSpace::thresholds()) {}
};

// Full adversarial game: run the learner under the game protocol with the
// block-boundary predictor while Nature picks labels by the offline strategy
// within each dyadic block and refines the interval between blocks.
PeeksResult nature_peeks_game(OnlineLearner& learner, const ZnParams& params,
                              bool retain_predictions = false);

}  // namespace prescient
