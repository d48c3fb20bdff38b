#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "prescient/harness.hpp"

using namespace prescient;

namespace {

GameConfig threshold_config() {
  GameConfig cfg;
  cfg.class_kind = "threshold";
  cfg.predictor_kind = "perfect";
  cfg.learner_spec = "restart";
  cfg.stream_kind = "random-realizable";
  cfg.T = 64;
  cfg.seed = 12345;
  cfg.trials = 5;
  return cfg;
}

}  // namespace

TEST_CASE("config JSON round trip and digest stability") {
  const char* text = R"({
    "class": {"kind": "threshold"},
    "predictor": {"kind": "corrupting", "k": 3},
    "learner": "meta",
    "stream": {"kind": "agnostic-noise", "rate": 0.1},
    "T": 32, "seed": 7, "trials": 4
  })";
  const GameConfig cfg = GameConfig::from_json(text);
  CHECK(cfg.class_kind == "threshold");
  CHECK(cfg.predictor_kind == "corrupting");
  CHECK(cfg.corrupt_k == 3);
  CHECK(cfg.learner_spec == "meta");
  CHECK(cfg.noise_rate == doctest::Approx(0.1));
  CHECK(cfg.T == 32);
  CHECK(cfg.trials == 4);
  CHECK(cfg.resolved_mode() == OfflineMode::AgnosticRewa);
  const GameConfig again = GameConfig::from_json(cfg.canonical_json());
  CHECK(again.digest() == cfg.digest());
}

TEST_CASE("config validation errors") {
  GameConfig cfg = threshold_config();
  cfg.T = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = threshold_config();
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = threshold_config();
  cfg.class_kind = "mystery";
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK_THROWS_AS(GameConfig::from_json("{nope"), ConfigError);
}

TEST_CASE("runs are byte-identical for identical config and seed") {
  const GameConfig cfg = threshold_config();
  const RunReport a = run_game(cfg);
  const RunReport b = run_game(cfg);
  CHECK(transcript_csv(a) == transcript_csv(b));
  GameConfig other = cfg;
  other.seed += 1;
  CHECK(transcript_csv(run_game(other)) != transcript_csv(a));
}

TEST_CASE("csv schemas are pinned") {
  const GameConfig cfg = threshold_config();
  const RunReport report = run_game(cfg);
  const std::string rounds = transcript_csv(report);
  CHECK(rounds.rfind(
            "trial,t,x,y,pred_dist,mistake_prob,predictor_mistake,learner,"
            "seed\n",
            0) == 0);
  const std::string bounds = bounds_csv(evaluate_bounds(report));
  CHECK(bounds.rfind("bound_name,analytic,measured_mean,stderr,pass\n", 0) ==
        0);
}

TEST_CASE("perfect predictor + restart on realizable thresholds") {
  const GameConfig cfg = threshold_config();
  const RunReport report = run_game(cfg);
  for (const TrialResult& trial : report.trials) {
    CHECK(trial.predictor_mistakes == 0);
    CHECK(trial.best_loss == 0);
    CHECK(trial.expected_mistakes <= std::log2(65.0) + 1e-12);
  }
  const BoundReport bounds = evaluate_bounds(report);
  REQUIRE(bounds.rows.size() == 1);
  CHECK(bounds.rows[0].analytic == doctest::Approx(std::log2(65.0)));
  CHECK(bounds.rows[0].pass);
}

TEST_CASE("corrupting predictor reports its budget as measured mistakes") {
  GameConfig cfg = threshold_config();
  cfg.predictor_kind = "corrupting";
  cfg.corrupt_k = 3;
  const RunReport report = run_game(cfg);
  for (const TrialResult& trial : report.trials)
    CHECK(trial.predictor_mistakes == 3);
  const BoundReport bounds = evaluate_bounds(report);
  CHECK(bounds.rows[0].analytic ==
        doctest::Approx(4.0 * std::log2(65.0)));
  CHECK(bounds.all_pass());
}

TEST_CASE("meta bound rows carry both horizon forms") {
  GameConfig cfg = threshold_config();
  cfg.predictor_kind = "corrupting";
  cfg.corrupt_k = 3;
  cfg.learner_spec = "meta";
  cfg.T = 16;
  cfg.trials = 2;
  const RunReport report = run_game(cfg);
  const BoundReport bounds = evaluate_bounds(report);
  REQUIRE(bounds.rows.size() == 2);
  CHECK(bounds.rows[0].asserted);
  CHECK_FALSE(bounds.rows[1].asserted);
  // 6((MP+1) * log2(T/(MP+1) + 1 + 1) + log2 T) with MP = 3, T = 16.
  CHECK(bounds.rows[0].analytic ==
        doctest::Approx(6.0 * (4.0 * std::log2(16.0 / 4.0 + 2.0) +
                               std::log2(16.0))));
  CHECK(bounds.rows[1].analytic <= bounds.rows[0].analytic);
}

TEST_CASE("combined learner bound report has the envelope row asserted") {
  GameConfig cfg = threshold_config();
  cfg.learner_spec = "combined";
  cfg.T = 16;
  cfg.trials = 2;
  const RunReport report = run_game(cfg);
  const BoundReport bounds = evaluate_bounds(report);
  bool saw_envelope = false;
  for (const BoundRow& row : bounds.rows) {
    if (row.name.rfind("combined.envelope", 0) == 0) {
      saw_envelope = true;
      CHECK(row.asserted);
      CHECK(row.pass);
    } else {
      CHECK_FALSE(row.asserted);
    }
  }
  CHECK(saw_envelope);
}

TEST_CASE("agnostic stream flips labels and mode resolution follows") {
  GameConfig cfg = threshold_config();
  cfg.stream_kind = "agnostic-noise";
  cfg.noise_rate = 0.3;
  cfg.trials = 3;
  CHECK(cfg.resolved_mode() == OfflineMode::AgnosticRewa);
  const RunReport report = run_game(cfg);
  bool saw_noise = false;
  for (const TrialResult& trial : report.trials)
    if (trial.best_loss > 0) saw_noise = true;
  CHECK(saw_noise);
  const BoundReport bounds = evaluate_bounds(report);
  CHECK(bounds.rows[0].name.rfind("restart.regret", 0) == 0);
  CHECK(bounds.all_pass());
}

TEST_CASE("lower bound run checks every stream property") {
  GameConfig cfg;
  cfg.class_kind = "threshold";
  cfg.stream_kind = "nature-zn";
  cfg.zn_n = 2;
  cfg.T = 21;
  cfg.learner_spec = "restart";
  const BoundReport report = run_lower_bound(cfg);
  REQUIRE(report.rows.size() == 5);
  for (const BoundRow& row : report.rows) CHECK(row.pass);
  CHECK(report.all_pass());
  CHECK(report.rows[0].measured >= 1.5 * std::log2(7.0) - 1e-9);

  GameConfig bad = cfg;
  bad.T = 22;
  CHECK_THROWS_AS(run_lower_bound(bad), ConfigError);
  GameConfig wrong_stream = cfg;
  wrong_stream.stream_kind = "random-realizable";
  CHECK_THROWS_AS(run_lower_bound(wrong_stream), ConfigError);
}

TEST_CASE("lower bound at T=14, n=1 forces past log2 of the block") {
  GameConfig cfg;
  cfg.class_kind = "threshold";
  cfg.stream_kind = "nature-zn";
  cfg.zn_n = 1;
  cfg.T = 14;
  cfg.learner_spec = "soa-projection";
  const BoundReport report = run_lower_bound(cfg);
  CHECK(report.all_pass());
  CHECK(report.rows[0].analytic == doctest::Approx(std::log2(7.0)));
  CHECK(report.rows[0].measured >= std::log2(7.0) - 1e-9);
}

TEST_CASE("combined-agnostic bound report passes on noisy streams") {
  GameConfig cfg = threshold_config();
  cfg.learner_spec = "combined-agnostic";
  cfg.stream_kind = "agnostic-noise";
  cfg.noise_rate = 0.1;
  cfg.predictor_kind = "corrupting";
  cfg.corrupt_k = 3;
  cfg.T = 32;
  cfg.trials = 20;
  const RunReport report = run_game(cfg);
  const BoundReport bounds = evaluate_bounds(report);
  REQUIRE(bounds.rows.size() == 3);
  CHECK(bounds.all_pass());
}

TEST_CASE("combined envelope value for a class of littlestone dimension 3") {
  GameConfig cfg;
  cfg.class_kind = "finite";
  for (int i = 0; i < 3; ++i) cfg.finite.domain.push_back(Example::atom(i));
  for (int row = 0; row < 8; ++row)
    cfg.finite.table.push_back({(row >> 0) & 1, (row >> 1) & 1, (row >> 2) & 1});
  cfg.predictor_kind = "perfect";
  cfg.learner_spec = "combined";
  cfg.stream_kind = "random-realizable";
  cfg.T = 64;
  cfg.seed = 5;
  cfg.trials = 3;
  const RunReport report = run_game(cfg);
  const BoundReport bounds = evaluate_bounds(report);
  for (const BoundRow& row : bounds.rows)
    if (row.asserted) CHECK(row.analytic == doctest::Approx(14.0));
  CHECK(bounds.all_pass());
}

TEST_CASE("every learner emits valid distributions; deterministic ones emit "
          "point masses") {
  for (const std::string spec :
       {"restart", "expert:2", "meta", "combined", "combined-agnostic",
        "soa-projection"}) {
    GameConfig cfg = threshold_config();
    cfg.learner_spec = spec;
    cfg.predictor_kind = "corrupting";
    cfg.corrupt_k = 2;
    cfg.T = 16;
    cfg.trials = 2;
    if (spec == "combined-agnostic") cfg.offline_mode = "agnostic";
    const RunReport report = run_game(cfg);
    const bool deterministic = spec != "combined-agnostic";
    for (const TrialResult& trial : report.trials) {
      for (const RoundRecord& r : trial.transcript.rounds) {
        double sum = 0.0;
        for (double p : r.prediction) sum += p;
        CHECK(std::abs(sum - 1.0) < 1e-12);
        if (deterministic) {
          const double top =
              *std::max_element(r.prediction.begin(), r.prediction.end());
          CHECK(top == 1.0);
        }
      }
    }
  }
}

TEST_CASE("zn predictor under the game protocol reveals block windows") {
  // The correctly-revealed-future set at round t must be exactly
  // {t+1 .. ceil(t/block)*block}.
  GameConfig cfg;
  cfg.class_kind = "threshold";
  cfg.predictor_kind = "zn";
  cfg.zn_n = 2;
  cfg.T = 21;
  cfg.learner_spec = "restart";
  cfg.stream_kind = "explicit";
  cfg.retain_full_predictions = true;
  cfg.trials = 1;
  const ZnParams params = ZnParams::create(21, 2);
  const StreamLevels levels = stream_gen(params, std::vector<int>{3, 6});
  cfg.explicit_stream.xs = levels.examples();
  cfg.explicit_stream.ys.assign(21, 0);
  const RunReport report = run_game(cfg);
  const TrialResult& trial = report.trials[0];
  REQUIRE(trial.transcript.retained_predictions.size() == 21);
  const int block = params.block();
  for (int t = 1; t <= 21; ++t) {
    const std::vector<Example>& out =
        trial.transcript.retained_predictions[t - 1];
    const int expect_hi = (t + block - 1) / block * block;
    for (int s = t + 1; s <= 21; ++s) {
      const bool correct = out[s - 1] == cfg.explicit_stream.xs[s - 1];
      CHECK(correct == (s <= expect_hi));
    }
  }
}

TEST_CASE("corruption sweep means are monotone nondecreasing") {
  GameConfig cfg = threshold_config();
  cfg.trials = 100;
  const SweepResult by_k = sweep(cfg, "k", {0, 1, 3, 7});
  REQUIRE(by_k.points.size() == 4);
  for (std::size_t i = 1; i < by_k.points.size(); ++i)
    CHECK(by_k.points[i].mean >= by_k.points[i - 1].mean);
}

TEST_CASE("sweep mechanics and guards") {
  GameConfig cfg = threshold_config();
  cfg.trials = 3;
  const SweepResult by_k = sweep(cfg, "k", {0, 1, 3});
  REQUIRE(by_k.points.size() == 3);
  CHECK(by_k.csv().rfind(
            "axis_value,mean_expected_mistakes,stderr,analytic_bound,"
            "mean_over_T\n",
            0) == 0);
  CHECK(by_k.svg().find("<svg") != std::string::npos);
  CHECK_THROWS_AS(sweep(cfg, "k", {}), ConfigError);
  CHECK_THROWS_AS(sweep(cfg, "z", {1}), ConfigError);

  const SweepResult by_T = sweep(cfg, "T", {16, 32, 64}, true);
  REQUIRE(by_T.points.size() == 3);
  for (const SweepPoint& p : by_T.points) CHECK(p.mean_over_T >= 0.0);
}
