#include "prescient/adversary.hpp"

#include <algorithm>
#include <cmath>

namespace prescient {

std::vector<Rat> f_even(const Rat& a, const Rat& b, int m) {
  if (!(a < b)) throw StructuralError("f_even: a >= b");
  if (m < 1) throw StructuralError("f_even: m < 1");
  std::vector<Rat> out;
  out.reserve(m);
  const Rat step = (b - a) / Rat(m + 1);
  for (int i = 1; i <= m; ++i) out.push_back(a + step * Rat(i));
  return out;
}

std::vector<int> dyadic_indices(int n) {
  if (n < 1 || (n + 1) & n)
    throw StructuralError("dyadic order needs length 2^k - 1");
  std::vector<int> out;
  out.reserve(n);
  for (int step = (n + 1) / 2; step >= 1; step /= 2)
    for (int idx = step; idx <= n; idx += 2 * step) out.push_back(idx - 1);
  return out;
}

std::vector<Rat> dyadic_order(std::span<const Rat> sorted) {
  std::vector<Rat> out;
  out.reserve(sorted.size());
  for (int i : dyadic_indices(static_cast<int>(sorted.size())))
    out.push_back(sorted[i]);
  return out;
}

ZnParams ZnParams::create(int T, int n) {
  if (T < 1 || n < 0) throw ConfigError("Zn: need T >= 1 and n >= 0");
  if (T % (n + 1) != 0) throw ConfigError("Zn: n+1 must divide T");
  const int block = T / (n + 1);
  if ((block + 1) & block) throw ConfigError("Zn: block+1 must be a power of two");
  ZnParams p;
  p.T = T;
  p.n = n;
  return p;
}

std::vector<Rat> ZnParams::initial_block() const {
  return f_even(Rat(0), Rat(1), block());
}

std::vector<Example> StreamLevels::examples() const {
  std::vector<Example> out;
  out.reserve(flat.size());
  for (const Rat& v : flat) out.push_back(Example::point(v));
  return out;
}

StreamLevels stream_gen(const ZnParams& params, std::span<const int> js) {
  if (static_cast<int>(js.size()) > params.n)
    throw StructuralError("stream_gen: more indices than the mistake budget");
  const int block = params.block();
  StreamLevels out;
  out.levels.push_back(params.initial_block());
  out.brackets.emplace_back(Rat(0), Rat(1));
  for (int j : js) {
    if (j < 1 || j > block + 1)
      throw StructuralError("stream_gen: index outside {1..block+1}");
    const std::vector<Rat>& prev = out.levels.back();
    const auto& [a_prev, b_prev] = out.brackets.back();
    Rat lo, hi;
    if (j == 1) {
      lo = a_prev;
      hi = prev.front();
    } else if (j == block + 1) {
      lo = prev.back();
      hi = b_prev;
    } else {
      lo = prev[j - 2];
      hi = prev[j - 1];
    }
    out.levels.push_back(f_even(lo, hi, block));
    out.brackets.emplace_back(lo, hi);
  }
  for (const auto& level : out.levels) {
    const std::vector<Rat> dyd = dyadic_order(level);
    out.flat.insert(out.flat.end(), dyd.begin(), dyd.end());
  }
  return out;
}

namespace {

class ZnStreamPredictor final : public ExamplePredictor {
 public:
  explicit ZnStreamPredictor(const ZnParams& params) : params_(params) {}
  int horizon() const override { return params_.T; }

  std::vector<Example> predict(const PredictorInput& input) override {
    const std::vector<Example>& prefix = input.prefix;
    const int t = static_cast<int>(prefix.size());
    const int block = params_.block();
    std::vector<int> js;
    for (int i = 1; i <= params_.n && i * block + 1 <= t; ++i) {
      // Sorted previous block and the first example of the new one.
      std::vector<Example> prev(prefix.begin() + (i - 1) * block,
                                prefix.begin() + i * block);
      std::sort(prev.begin(), prev.end());
      const Example& boundary = prefix[i * block];
      int j = block + 1;
      for (int p = 1; p <= block; ++p)
        if (boundary < prev[p - 1]) {
          j = p;
          break;
        }
      js.push_back(j);
    }
    std::vector<Example> out = stream_gen(params_, js).examples();
    out.resize(params_.T, Example::star());
    return out;
  }

 private:
  ZnParams params_;
};

}  // namespace

std::unique_ptr<ExamplePredictor> make_zn_predictor(const ZnParams& params) {
  return std::make_unique<ZnStreamPredictor>(params);
}

Label nature_offline_step(double p1, const VersionSpace& V, const Example& x) {
  if (V.empty()) throw StructuralError("nature: empty version space");
  if (p1 >= 0.5) return V.exists(x, 0) ? 0 : 1;
  return V.exists(x, 1) ? 1 : 0;
}

double lower_bound_value(const ZnParams& params) {
  return (params.n + 1) / 2.0 *
         std::log2(static_cast<double>(params.T) / (params.n + 1));
}

PeeksResult nature_peeks_game(OnlineLearner& learner, const ZnParams& params,
                              bool retain_predictions) {
  const int block = params.block();
  PeeksResult result;
  Predictor predictor(make_zn_predictor(params));
  VersionSpace version = VersionSpace::thresholds();
  std::vector<Example> prev_output;
  int t = 0;

  for (int i = 1; i <= params.n + 1; ++i) {
    result.entering.push_back(version);
    const StreamLevels levels = stream_gen(
        params, std::span<const int>(result.indices.data(), i - 1));
    const std::vector<Example> flat = levels.examples();
    // The i-th block of the generated stream, already in dyadic order.
    std::vector<Example> block_examples(flat.begin() + (i - 1) * block,
                                        flat.begin() + i * block);

    std::vector<std::pair<Rat, Label>> labeled;
    for (const Example& x : block_examples) {
      ++t;
      const std::vector<Example>& predicted = predictor.observe(x);
      const bool mistake = t >= 2 && prev_output[t - 1] != x;
      if (mistake) result.predictor_mistake_rounds.push_back(t);
      const std::vector<double> dist = learner.predict(x, predicted);
      if (dist.size() < 2)
        throw ContractError("nature: learner must emit binary distributions");
      const Label y = nature_offline_step(dist[1], version, x);
      version = version.restrict(x, y);
      if (version.empty())
        throw StructuralError("nature: version space emptied mid-block");
      learner.update(y);

      RoundRecord rec;
      rec.t = t;
      rec.x = x;
      rec.y = y;
      rec.prediction = dist;
      rec.predictor_output_digest = digest_sequence(predicted);
      rec.predictor_mistake = mistake;
      result.transcript.rounds.push_back(std::move(rec));
      if (retain_predictions)
        result.transcript.retained_predictions.push_back(predicted);

      result.stream.xs.push_back(x);
      result.stream.ys.push_back(y);
      labeled.emplace_back(x.value, y);
      prev_output = predicted;
    }

    if (i <= params.n) {
      // Sorted labels must form a 1-prefix/0-suffix pattern; the refinement
      // index is the first 0.
      std::sort(labeled.begin(), labeled.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      int first_zero = block + 1;
      for (int p = 1; p <= block; ++p)
        if (labeled[p - 1].second == 0) {
          first_zero = p;
          break;
        }
      for (int p = first_zero; p <= block; ++p)
        if (labeled[p - 1].second != 0)
          throw StructuralError("nature: block labels not 1-prefix/0-suffix");
      result.indices.push_back(first_zero);
    }
  }

  result.final_version = version;
  result.forced_expected_mistakes = expected_mistakes(result.transcript);
  return result;
}

}  // namespace prescient
