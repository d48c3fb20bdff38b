#include "prescient/predictors.hpp"

#include <algorithm>

namespace prescient {

namespace {

class ConsistentWrap final : public ExamplePredictor {
 public:
  explicit ConsistentWrap(std::unique_ptr<ExamplePredictor> inner)
      : inner_(std::move(inner)) {}
  int horizon() const override { return inner_->horizon(); }
  std::vector<Example> predict(const PredictorInput& input) override {
    std::vector<Example> out = inner_->predict(input);
    out.resize(horizon(), Example::star());
    std::copy(input.prefix.begin(), input.prefix.end(), out.begin());
    return out;
  }

 private:
  std::unique_ptr<ExamplePredictor> inner_;
};

class LazyWrap final : public ExamplePredictor {
 public:
  explicit LazyWrap(std::unique_ptr<ExamplePredictor> inner)
      : inner_(std::move(inner)) {}
  int horizon() const override { return inner_->horizon(); }
  std::vector<Example> predict(const PredictorInput& input) override {
    const std::size_t t = input.prefix.size();
    if (!last_.empty() && t >= 2 && t <= last_.size() &&
        last_[t - 1] == input.prefix[t - 1])
      return last_;
    last_ = inner_->predict(input);
    return last_;
  }

 private:
  std::unique_ptr<ExamplePredictor> inner_;
  std::vector<Example> last_;
};

class PerfectPredictor final : public ExamplePredictor {
 public:
  explicit PerfectPredictor(std::vector<Example> stream)
      : stream_(std::move(stream)) {}
  int horizon() const override { return static_cast<int>(stream_.size()); }
  std::vector<Example> predict(const PredictorInput&) override {
    return stream_;
  }

 private:
  std::vector<Example> stream_;
};

class StaticPredictor final : public ExamplePredictor {
 public:
  explicit StaticPredictor(std::vector<Example> z) : z_(std::move(z)) {}
  int horizon() const override { return static_cast<int>(z_.size()); }
  std::vector<Example> predict(const PredictorInput&) override { return z_; }

 private:
  std::vector<Example> z_;
};

class CorruptingPredictor final : public ExamplePredictor {
 public:
  CorruptingPredictor(std::vector<Example> base, int k, std::uint64_t seed)
      : base_(std::move(base)) {
    const int T = horizon();
    if (k < 0 || k > T - 1)
      throw StructuralError("corrupting predictor: k outside [0, T-1]");
    Rng rng(seed);
    for (std::int64_t t : rng.sample_distinct(2, T, k))
      mistake_rounds_.push_back(static_cast<int>(t));
    std::uint32_t max_atom = 0;
    bool has_atom = false;
    for (const Example& e : base_)
      if (e.is_atom()) {
        has_atom = true;
        max_atom = std::max(max_atom, e.atom_id);
      }
    sentinel_ = has_atom ? Example::atom(max_atom + 1) : Example::star();
    alt_sentinel_ = Example::atom(has_atom ? max_atom + 2 : 0xFFFFFFFFu);
  }
  int horizon() const override { return static_cast<int>(base_.size()); }
  std::vector<Example> predict(const PredictorInput& input) override {
    std::vector<Example> out = base_;
    for (int m : mistake_rounds_) {
      if (m <= static_cast<int>(input.prefix.size())) continue;
      out[m - 1] = base_[m - 1] == sentinel_ ? alt_sentinel_ : sentinel_;
    }
    return out;
  }

 private:
  std::vector<Example> base_;
  std::vector<int> mistake_rounds_;
  Example sentinel_;
  Example alt_sentinel_;
};

class CustomPredictor final : public ExamplePredictor {
 public:
  CustomPredictor(int horizon, CustomPredictFn fn)
      : horizon_(horizon), fn_(std::move(fn)) {}
  int horizon() const override { return horizon_; }
  std::vector<Example> predict(const PredictorInput& input) override {
    return fn_(input);
  }

 private:
  int horizon_;
  CustomPredictFn fn_;
};

}  // namespace

std::unique_ptr<ExamplePredictor> wrap_consistent(
    std::unique_ptr<ExamplePredictor> inner) {
  return std::make_unique<ConsistentWrap>(std::move(inner));
}

std::unique_ptr<ExamplePredictor> wrap_lazy(
    std::unique_ptr<ExamplePredictor> inner) {
  return std::make_unique<LazyWrap>(std::move(inner));
}

Predictor::Predictor(std::unique_ptr<ExamplePredictor> inner)
    : horizon_(inner->horizon()) {
  pipeline_ = wrap_lazy(wrap_consistent(std::move(inner)));
}

const std::vector<Example>& Predictor::observe(const Example& x,
                                               SideInfo side) {
  if (observed() >= horizon_)
    throw StructuralError("predictor observation past horizon");
  prefix_.push_back(x);
  sides_.push_back(std::move(side));
  last_output_ = pipeline_->predict(PredictorInput{prefix_, sides_});
  return last_output_;
}

std::unique_ptr<ExamplePredictor> make_perfect(std::vector<Example> stream) {
  return std::make_unique<PerfectPredictor>(std::move(stream));
}

std::unique_ptr<ExamplePredictor> make_static(std::vector<Example> z) {
  return std::make_unique<StaticPredictor>(std::move(z));
}

std::unique_ptr<ExamplePredictor> make_corrupting(std::vector<Example> base,
                                                  int k, std::uint64_t seed) {
  return std::make_unique<CorruptingPredictor>(std::move(base), k, seed);
}

std::unique_ptr<ExamplePredictor> make_custom(int horizon,
                                              CustomPredictFn fn) {
  return std::make_unique<CustomPredictor>(horizon, std::move(fn));
}

}  // namespace prescient
