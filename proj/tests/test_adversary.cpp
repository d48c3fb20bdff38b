#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <deque>

#include "prescient/adversary.hpp"
#include "prescient/rng.hpp"

using namespace prescient;

namespace {

// Independent reference for the midpoint-first ordering: breadth-first over
// dyadic index intervals.
std::vector<int> dyadic_reference(int n) {
  std::vector<int> out;
  std::deque<std::pair<int, int>> queue{{0, n + 1}};  // open (lo, hi)
  while (!queue.empty()) {
    const auto [lo, hi] = queue.front();
    queue.pop_front();
    if (hi - lo <= 1) continue;
    const int mid = (lo + hi) / 2;
    out.push_back(mid - 1);
    queue.emplace_back(lo, mid);
    queue.emplace_back(mid, hi);
  }
  return out;
}

}  // namespace

TEST_CASE("f_even spaces points evenly and strictly inside") {
  const std::vector<Rat> three = f_even(Rat(0), Rat(1), 3);
  CHECK(three == std::vector<Rat>{Rat(1, 4), Rat(1, 2), Rat(3, 4)});

  const std::vector<Rat> seven = f_even(Rat(1, 4), Rat(1, 2), 7);
  REQUIRE(seven.size() == 7);
  for (const Rat& v : seven) {
    CHECK(Rat(1, 4) < v);
    CHECK(v < Rat(1, 2));
  }

  Rng rng(3);
  for (int rep = 0; rep < 40; ++rep) {
    const Rat a(rng.range(0, 100), 101);
    const Rat b = a + Rat(1 + rng.range(0, 50), 200);
    const int m = 1 + static_cast<int>(rng.below(12));
    const std::vector<Rat> pts = f_even(a, b, m);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) CHECK(pts[i] < pts[i + 1]);
  }
  CHECK_THROWS_AS(f_even(Rat(1, 2), Rat(1, 2), 3), StructuralError);
  CHECK_THROWS_AS(f_even(Rat(3, 4), Rat(1, 4), 3), StructuralError);
}

TEST_CASE("dyadic order: pinned small cases and the bfs reference") {
  CHECK(dyadic_indices(1) == std::vector<int>{0});
  CHECK(dyadic_indices(3) == std::vector<int>{1, 0, 2});
  CHECK(dyadic_indices(7) == std::vector<int>{3, 1, 5, 0, 2, 4, 6});
  for (int n : {1, 3, 7, 15, 31, 63}) CHECK(dyadic_indices(n) == dyadic_reference(n));
  CHECK_THROWS_AS(dyadic_indices(4), StructuralError);
  CHECK_THROWS_AS(dyadic_indices(6), StructuralError);

  const std::vector<Rat> sorted = {Rat(1, 4), Rat(2, 4), Rat(3, 4)};
  CHECK(dyadic_order(sorted) ==
        std::vector<Rat>{Rat(2, 4), Rat(1, 4), Rat(3, 4)});
}

TEST_CASE("zn params validation") {
  CHECK_NOTHROW(ZnParams::create(21, 2));
  CHECK_NOTHROW(ZnParams::create(60, 3));
  CHECK_THROWS_AS(ZnParams::create(22, 2), ConfigError);  // 3 does not divide
  CHECK_THROWS_AS(ZnParams::create(18, 2), ConfigError);  // block+1 = 7
  CHECK(ZnParams::create(21, 2).block() == 7);
}

TEST_CASE("stream generator: structure of the refinement levels") {
  const ZnParams params = ZnParams::create(21, 2);
  const StreamLevels base = stream_gen(params, {});
  CHECK(base.flat.size() == 7);
  CHECK(base.flat == dyadic_order(params.initial_block()));

  // j = 1 places the next level strictly left of the previous minimum.
  const std::vector<int> j1 = {1};
  const StreamLevels left = stream_gen(params, j1);
  for (const Rat& v : left.levels[1]) CHECK(v < left.levels[0].front());

  // j = block+1 places it strictly right of the previous maximum.
  const std::vector<int> j8 = {8};
  const StreamLevels right = stream_gen(params, j8);
  for (const Rat& v : right.levels[1]) CHECK(right.levels[0].back() < v);

  const std::vector<int> bad = {9};
  CHECK_THROWS_AS(stream_gen(params, bad), StructuralError);
}

TEST_CASE("stream generator is deterministic with common prefixes") {
  const ZnParams params = ZnParams::create(21, 2);
  const std::vector<int> a = {3, 5};
  const std::vector<int> b = {3, 2};
  const StreamLevels sa = stream_gen(params, a);
  const StreamLevels sb = stream_gen(params, b);
  CHECK(std::equal(sa.flat.begin(), sa.flat.begin() + 14, sb.flat.begin()));
  const StreamLevels again = stream_gen(params, a);
  CHECK(again.flat == sa.flat);
}

TEST_CASE("nested-interval containment on random index sequences") {
  Rng rng(7);
  for (int rep = 0; rep < 40; ++rep) {
    const ZnParams params = ZnParams::create(rep % 2 == 0 ? 21 : 60,
                                             rep % 2 == 0 ? 2 : 3);
    const int block = params.block();
    std::vector<int> js;
    for (int i = 0; i < params.n; ++i)
      js.push_back(1 + static_cast<int>(rng.below(block + 1)));
    const StreamLevels levels = stream_gen(params, js);
    for (int i = 0; i < params.n; ++i) {
      const std::vector<Rat>& si = levels.levels[i];
      const auto& [ai, bi] = levels.brackets[i];
      const int j = js[i];
      const Rat lo = j == 1 ? ai : si[j - 2];
      const Rat hi = j == block + 1 ? bi : si[j - 1];
      for (int p = i + 1; p <= params.n; ++p)
        for (const Rat& v : levels.levels[p]) {
          CHECK(lo < v);
          CHECK(v < hi);
        }
    }
  }
}

TEST_CASE("zn predictor errs exactly at the block boundaries") {
  Rng rng(11);
  const ZnParams params = ZnParams::create(21, 2);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<int> js;
    for (int i = 0; i < params.n; ++i)
      js.push_back(1 + static_cast<int>(rng.below(params.block() + 1)));
    const std::vector<Example> xs = stream_gen(params, js).examples();
    Predictor p(make_zn_predictor(params));
    std::vector<Example> prev;
    std::vector<int> mistake_rounds;
    for (int t = 1; t <= params.T; ++t) {
      const std::vector<Example> out = p.observe(xs[t - 1]);
      if (t >= 2 && prev[t - 1] != xs[t - 1]) mistake_rounds.push_back(t);
      // Consistency: the prefix always equals the observations.
      for (int s = 1; s <= t; ++s) CHECK(out[s - 1] == xs[s - 1]);
      // Between boundaries the output must not change (laziness).
      if (t >= 2 && (t - 1) % params.block() != 0) CHECK(out == prev);
      prev = out;
    }
    CHECK(mistake_rounds == std::vector<int>{8, 15});
  }
}

TEST_CASE("zn predictor recovers the generating indices") {
  Rng rng(13);
  const ZnParams params = ZnParams::create(60, 3);
  const int block = params.block();
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<int> js;
    for (int i = 0; i < params.n; ++i)
      js.push_back(1 + static_cast<int>(rng.below(block + 1)));
    const StreamLevels levels = stream_gen(params, js);
    const std::vector<Example> xs = levels.examples();
    Predictor p(make_zn_predictor(params));
    std::vector<Example> last;
    for (int t = 1; t <= params.T; ++t) last = p.observe(xs[t - 1]);
    // After the last boundary the full stream is predicted exactly.
    CHECK(std::equal(xs.begin(), xs.end(), last.begin()));
  }
}

TEST_CASE("nature offline step prefers the learner's likely side") {
  VersionSpace all = VersionSpace::thresholds();
  const Example x = Example::point(Rat(1, 2));
  CHECK(nature_offline_step(0.7, all, x) == 0);
  CHECK(nature_offline_step(0.2, all, x) == 1);
  // When the version space is pinned, labels are forced.
  VersionSpace pinned = all.restrict(Example::point(Rat(3, 4)), 1);
  // Every survivor labels 1/2 with 1.
  CHECK(nature_offline_step(0.7, pinned, x) == 1);
  ThresholdInterval dead;
  dead.star_violated = true;
  CHECK_THROWS_AS(
      nature_offline_step(0.5, VersionSpace::threshold_interval(dead), x),
      StructuralError);
}

TEST_CASE("a shattered dyadic block forces at least half a log") {
  // Any probability sequence against the offline strategy loses >= 1/2 per
  // dyadic level when the version space shatters the block.
  Rng rng(17);
  const std::vector<Rat> sorted = f_even(Rat(0), Rat(1), 7);
  const std::vector<Rat> block = dyadic_order(sorted);
  for (int rep = 0; rep < 50; ++rep) {
    VersionSpace v = VersionSpace::thresholds();
    double forced = 0.0;
    for (const Rat& value : block) {
      const Example x = Example::point(value);
      const double p1 = rng.unit();
      const Label y = nature_offline_step(p1, v, x);
      forced += y == 1 ? 1.0 - p1 : p1;
      v = v.restrict(x, y);
      CHECK_FALSE(v.empty());
    }
    CHECK(forced >= 0.5 * std::log2(7.0) - 1e-9);
  }
}

TEST_CASE("lower bound values") {
  CHECK(lower_bound_value(ZnParams::create(21, 2)) ==
        doctest::Approx(1.5 * std::log2(7.0)));
  CHECK(lower_bound_value(ZnParams::create(60, 3)) ==
        doctest::Approx(7.8138).epsilon(1e-4));
  CHECK(lower_bound_value(ZnParams::create(2, 1)) == doctest::Approx(0.0));
}

TEST_CASE("peeks game output is a generator stream, realizable, shattered") {
  const ZnParams params = ZnParams::create(21, 2);
  SoaProjectionLearner learner(HypothesisClass::thresholds());
  const PeeksResult result = nature_peeks_game(learner, params);

  REQUIRE(static_cast<int>(result.stream.xs.size()) == params.T);
  REQUIRE(static_cast<int>(result.indices.size()) == params.n);

  // Generator membership: recomputing from the indices reproduces it.
  const StreamLevels regen = stream_gen(params, result.indices);
  CHECK(regen.examples() == result.stream.xs);

  // Realizability.
  CHECK_FALSE(result.final_version.empty());
  VersionSpace replay = VersionSpace::thresholds();
  for (int t = 0; t < params.T; ++t)
    replay = replay.restrict(result.stream.xs[t], result.stream.ys[t]);
  CHECK_FALSE(replay.empty());

  // Every block is threshold-shattered by its entering version space.
  const int block = params.block();
  for (int i = 0; i <= params.n; ++i) {
    std::vector<Rat> pts;
    for (int t = i * block; t < (i + 1) * block; ++t)
      pts.push_back(result.stream.xs[t].value);
    std::sort(pts.begin(), pts.end());
    CHECK(threshold_shatter_check(result.entering[i], pts));
  }

  // The predictor misses exactly at the boundaries.
  CHECK(result.predictor_mistake_rounds == std::vector<int>{8, 15});

  // Forced mistakes meet the bound.
  CHECK(result.forced_expected_mistakes >=
        lower_bound_value(params) - 1e-9);
}
