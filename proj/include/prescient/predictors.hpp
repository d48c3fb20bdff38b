#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "prescient/core.hpp"
#include "prescient/rng.hpp"

namespace prescient {

// Opaque per-round side information (weather covariates, upstream model
// state, ...). Core predictors ignore it; custom ones may read it.
using SideInfo = std::string;

struct PredictorInput {
  const std::vector<Example>& prefix;   // observed x_{1:t}
  const std::vector<SideInfo>& sides;   // payloads aligned with the prefix
};

// A forecaster of the whole example sequence: given the observed prefix
// x_{1:t}, produce a full length-T prediction. Implementations are pure
// functions of their input (plus construction-time randomness), so wrappers
// are free to skip calls.
class ExamplePredictor {
 public:
  virtual ~ExamplePredictor() = default;
  virtual std::vector<Example> predict(const PredictorInput& input) = 0;
  virtual int horizon() const = 0;
};

// Force the output prefix to equal the observed prefix (and the output
// length to equal the horizon), whatever the inner predictor emits.
std::unique_ptr<ExamplePredictor> wrap_consistent(
    std::unique_ptr<ExamplePredictor> inner);

// Reuse the previous output whenever it was correct at the newly observed
// position.
std::unique_ptr<ExamplePredictor> wrap_lazy(
    std::unique_ptr<ExamplePredictor> inner);

// Framework-facing predictor: lazy(consistent(inner)) plus prefix
// bookkeeping. One instance per game; observations are strictly sequential.
class Predictor {
 public:
  Predictor(std::unique_ptr<ExamplePredictor> inner);

  // Feed x_t (optionally with a side payload); returns the full length-T
  // prediction for this round.
  const std::vector<Example>& observe(const Example& x,
                                      SideInfo side = SideInfo());

  const std::vector<Example>& last_output() const { return last_output_; }
  int horizon() const { return horizon_; }
  int observed() const { return static_cast<int>(prefix_.size()); }

 private:
  std::unique_ptr<ExamplePredictor> pipeline_;
  std::vector<Example> prefix_;
  std::vector<SideInfo> sides_;
  std::vector<Example> last_output_;
  int horizon_;
};

// Always predicts the true stream.
std::unique_ptr<ExamplePredictor> make_perfect(std::vector<Example> stream);

// Fixes z_{1:T} before the game; the wrapper splices the observed prefix in.
std::unique_ptr<ExamplePredictor> make_static(std::vector<Example> z);

// Run against its own base stream, errs at exactly k seed-chosen rounds in
// {2..T}: those future positions read as a wrong sentinel example until the
// true value has been observed.
std::unique_ptr<ExamplePredictor> make_corrupting(std::vector<Example> base,
                                                  int k, std::uint64_t seed);

// Arbitrary forecasting logic; the only predictor kind that sees the side
// payloads.
using CustomPredictFn =
    std::function<std::vector<Example>(const PredictorInput&)>;
std::unique_ptr<ExamplePredictor> make_custom(int horizon, CustomPredictFn fn);

}  // namespace prescient
