#include "prescient/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "prescient/predictors.hpp"
#include "prescient/rng.hpp"

namespace prescient {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

nlohmann::json example_json(const Example& e) {
  nlohmann::json j;
  if (e.is_point())
    j["point"] = e.value.str();
  else if (e.is_star())
    j["star"] = true;
  else
    j["atom"] = e.atom_id;
  return j;
}

Example example_from(const nlohmann::json& j) {
  if (j.contains("point")) return Example::point(Rat::parse(j["point"].get<std::string>()));
  if (j.contains("star")) return Example::star();
  if (j.contains("atom")) return Example::atom(j["atom"].get<std::uint32_t>());
  throw ConfigError("example JSON must have point/star/atom");
}

}  // namespace

GameConfig GameConfig::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config parse failure: ") + e.what());
  }
  GameConfig cfg;
  if (j.contains("class")) {
    const auto& c = j["class"];
    cfg.class_kind = c.value("kind", "threshold");
    if (cfg.class_kind == "finite") {
      cfg.finite.domain.clear();
      for (const auto& e : c.at("domain")) cfg.finite.domain.push_back(example_from(e));
      cfg.finite.table = c.at("table").get<std::vector<std::vector<Label>>>();
      cfg.finite.label_count = c.value("label_count", 2);
    }
  }
  if (j.contains("predictor")) {
    const auto& p = j["predictor"];
    cfg.predictor_kind = p.value("kind", "perfect");
    if (p.contains("sequence"))
      for (const auto& e : p["sequence"]) cfg.static_seq.push_back(example_from(e));
    cfg.corrupt_k = p.value("k", 0);
    cfg.zn_n = p.value("n", cfg.zn_n);
  }
  cfg.learner_spec = j.value("learner", cfg.learner_spec);
  if (j.contains("stream")) {
    const auto& s = j["stream"];
    cfg.stream_kind = s.value("kind", cfg.stream_kind);
    cfg.noise_rate = s.value("rate", 0.0);
    cfg.zn_n = s.value("n", cfg.zn_n);
    if (s.contains("xs")) {
      for (const auto& e : s["xs"]) cfg.explicit_stream.xs.push_back(example_from(e));
      cfg.explicit_stream.ys = s.at("ys").get<std::vector<Label>>();
    }
  }
  cfg.T = j.value("T", cfg.T);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.trials = j.value("trials", cfg.trials);
  cfg.retain_full_predictions = j.value("retain_predictions", false);
  cfg.offline_mode = j.value("offline_mode", "");
  cfg.validate();
  return cfg;
}

std::string GameConfig::canonical_json() const {
  nlohmann::json j;
  j["class"]["kind"] = class_kind;
  if (class_kind == "finite") {
    for (const Example& e : finite.domain)
      j["class"]["domain"].push_back(example_json(e));
    j["class"]["table"] = finite.table;
    j["class"]["label_count"] = finite.label_count;
  }
  j["predictor"]["kind"] = predictor_kind;
  if (!static_seq.empty())
    for (const Example& e : static_seq)
      j["predictor"]["sequence"].push_back(example_json(e));
  j["predictor"]["k"] = corrupt_k;
  j["predictor"]["n"] = zn_n;
  j["learner"] = learner_spec;
  j["stream"]["kind"] = stream_kind;
  j["stream"]["rate"] = noise_rate;
  if (!explicit_stream.xs.empty()) {
    for (const Example& e : explicit_stream.xs)
      j["stream"]["xs"].push_back(example_json(e));
    j["stream"]["ys"] = explicit_stream.ys;
  }
  j["T"] = T;
  j["seed"] = seed;
  j["trials"] = trials;
  j["retain_predictions"] = retain_full_predictions;
  j["offline_mode"] = offline_mode;
  return j.dump();
}

std::uint64_t GameConfig::digest() const {
  const std::string s = canonical_json();
  return digest_bytes(std::span<const char>(s.data(), s.size()));
}

void GameConfig::validate() const {
  if (T < 1) throw ConfigError("config: T must be >= 1");
  if (trials < 1) throw ConfigError("config: trials must be >= 1");
  if (class_kind != "threshold" && class_kind != "finite")
    throw ConfigError("config: unknown class kind " + class_kind);
  if (class_kind == "finite" && finite.table.empty())
    throw ConfigError("config: finite class without table");
  if (stream_kind == "explicit" &&
      static_cast<int>(explicit_stream.xs.size()) != T)
    throw ConfigError("config: explicit stream length != T");
  if (noise_rate < 0.0 || noise_rate > 1.0)
    throw ConfigError("config: noise rate outside [0,1]");
}

HypothesisClass GameConfig::build_class() const {
  if (class_kind == "threshold") return HypothesisClass::thresholds();
  return HypothesisClass::finite(finite);
}

OfflineMode GameConfig::resolved_mode() const {
  if (offline_mode == "realizable") return OfflineMode::RealizableHalving;
  if (offline_mode == "agnostic") return OfflineMode::AgnosticRewa;
  if (!offline_mode.empty())
    throw ConfigError("config: unknown offline mode " + offline_mode);
  return stream_kind == "agnostic-noise" ? OfflineMode::AgnosticRewa
                                         : OfflineMode::RealizableHalving;
}

namespace {

Rat random_unit_rat(Rng& rng) {
  constexpr std::int64_t denom = 1 << 20;
  return Rat(rng.range(0, denom), denom);
}

LabeledStream build_stream(const GameConfig& cfg, const HypothesisClass& H,
                           Rng& rng) {
  LabeledStream stream;
  if (cfg.stream_kind == "explicit") {
    stream = cfg.explicit_stream;
  } else if (cfg.stream_kind == "random-realizable" ||
             cfg.stream_kind == "agnostic-noise") {
    if (H.is_threshold()) {
      const Rat a = random_unit_rat(rng);
      for (int t = 0; t < cfg.T; ++t) {
        const Example x = Example::point(random_unit_rat(rng));
        stream.xs.push_back(x);
        stream.ys.push_back(evaluate_threshold(a, x));
      }
    } else {
      const FiniteTable& tbl = cfg.finite;
      const int row = static_cast<int>(rng.below(tbl.size()));
      for (int t = 0; t < cfg.T; ++t) {
        const int d = static_cast<int>(rng.below(tbl.domain_size()));
        stream.xs.push_back(tbl.domain[d]);
        stream.ys.push_back(tbl.table[row][d]);
      }
    }
    if (cfg.stream_kind == "agnostic-noise") {
      const int K = H.label_count();
      for (Label& y : stream.ys)
        if (rng.coin(cfg.noise_rate)) {
          if (K == 2)
            y ^= 1;
          else
            y = static_cast<Label>((y + 1 + rng.below(K - 1)) % K);
        }
    }
  } else {
    throw ConfigError("stream kind " + cfg.stream_kind +
                      " is not playable by run_game");
  }
  stream.validate();
  return stream;
}

std::unique_ptr<ExamplePredictor> build_predictor(const GameConfig& cfg,
                                                  const LabeledStream& stream,
                                                  Rng& rng) {
  if (cfg.predictor_kind == "perfect") return make_perfect(stream.xs);
  if (cfg.predictor_kind == "static") {
    std::vector<Example> z = cfg.static_seq;
    if (static_cast<int>(z.size()) != cfg.T)
      throw ConfigError("static predictor sequence length != T");
    return make_static(std::move(z));
  }
  if (cfg.predictor_kind == "corrupting")
    return make_corrupting(stream.xs, cfg.corrupt_k, rng.next());
  if (cfg.predictor_kind == "zn")
    return make_zn_predictor(ZnParams::create(cfg.T, cfg.zn_n));
  throw ConfigError("unknown predictor kind " + cfg.predictor_kind);
}

void mean_se(const std::vector<double>& xs, double& mean, double& se) {
  mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) {
    se = 0.0;
    return;
  }
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size() - 1);
  se = std::sqrt(var / static_cast<double>(xs.size()));
}

}  // namespace

RunReport run_game(const GameConfig& cfg) {
  cfg.validate();
  RunReport report;
  report.cfg = cfg;
  const HypothesisClass H = cfg.build_class();
  const OfflineMode mode = cfg.resolved_mode();
  const std::uint64_t cfg_digest = cfg.digest();

  for (int trial = 0; trial < cfg.trials; ++trial) {
    TrialResult res;
    res.trial_seed = trial_seed(cfg.seed, static_cast<std::uint64_t>(trial));
    Rng rng(res.trial_seed);
    res.stream = build_stream(cfg, H, rng);
    Predictor predictor(build_predictor(cfg, res.stream, rng));
    std::unique_ptr<OnlineLearner> learner =
        make_learner(cfg.learner_spec, H, cfg.T, mode);

    res.transcript.config_digest = cfg_digest;
    res.transcript.seed = res.trial_seed;
    std::vector<Example> prev_output;
    for (int t = 1; t <= cfg.T; ++t) {
      const Example& x = res.stream.xs[t - 1];
      const std::vector<Example>& predicted = predictor.observe(x);
      const bool mistake = t >= 2 && prev_output[t - 1] != x;
      RoundRecord rec;
      rec.t = t;
      rec.x = x;
      rec.y = res.stream.ys[t - 1];
      rec.prediction = learner->predict(x, predicted);
      rec.predictor_output_digest = digest_sequence(predicted);
      rec.predictor_mistake = mistake;
      learner->update(rec.y);
      res.transcript.rounds.push_back(std::move(rec));
      if (cfg.retain_full_predictions)
        res.transcript.retained_predictions.push_back(predicted);
      prev_output = predicted;
    }
    res.expected_mistakes = expected_mistakes(res.transcript);
    res.best_loss = best_in_hindsight(H, res.stream);
    res.regret = res.expected_mistakes - static_cast<double>(res.best_loss);
    res.predictor_mistakes = predictor_mistake_count(res.transcript);
    report.trials.push_back(std::move(res));
  }

  std::vector<double> mist, regr, pm;
  for (const TrialResult& r : report.trials) {
    mist.push_back(r.expected_mistakes);
    regr.push_back(r.regret);
    pm.push_back(static_cast<double>(r.predictor_mistakes));
  }
  mean_se(mist, report.mean_mistakes, report.se_mistakes);
  mean_se(regr, report.mean_regret, report.se_regret);
  double dummy;
  mean_se(pm, report.mean_predictor_mistakes, dummy);
  return report;
}

bool BoundReport::all_pass() const {
  for (const BoundRow& r : rows)
    if (r.asserted && !r.pass) return false;
  return true;
}

namespace {

BoundRow make_row(std::string name, double analytic, double measured,
                  double se, bool asserted = true) {
  BoundRow row;
  row.name = std::move(name);
  row.analytic = analytic;
  row.measured = measured;
  row.se = se;
  row.pass = measured <= analytic + 3.0 * se;
  row.asserted = asserted;
  return row;
}

}  // namespace

BoundReport evaluate_bounds(const RunReport& report) {
  const GameConfig& cfg = report.cfg;
  const HypothesisClass H = cfg.build_class();
  const OfflineMode mode = cfg.resolved_mode();
  const double T = static_cast<double>(cfg.T);
  // Clamp the measured predictor-mistake mean into {0..T-1}.
  const double mp = std::min(report.mean_predictor_mistakes, T - 1.0);
  const BoundFn mb = offline_bound(H, OfflineMode::RealizableHalving);
  const BoundFn rb = offline_bound(H, OfflineMode::AgnosticRewa);
  const bool agnostic = mode == OfflineMode::AgnosticRewa;
  const double measured = agnostic ? report.mean_regret : report.mean_mistakes;
  const double se = agnostic ? report.se_regret : report.se_mistakes;

  BoundReport out;
  const std::string& spec = cfg.learner_spec;
  const auto meta_bound = [&](double m, const BoundFn& f, bool plus_one) {
    const double horizon = T / (m + 1.0) + (plus_one ? 1.0 : 0.0);
    return 6.0 * ((m + 1.0) * f.eval(horizon) + std::log2(T));
  };

  if (spec == "soa") {
    out.rows.push_back(make_row(
        "soa.ldim",
        static_cast<double>(littlestone_dimension(H.finite_table())), measured,
        se));
  } else if (spec == "restart") {
    if (agnostic)
      out.rows.push_back(make_row("restart.regret:(MP+1)*RB(T)",
                                  (mp + 1.0) * rb.eval(T), measured, se));
    else
      out.rows.push_back(make_row("restart.mistakes:(MP+1)*MB(T)",
                                  (mp + 1.0) * mb.eval(T), measured, se));
  } else if (spec.rfind("expert:", 0) == 0) {
    const double c = std::stod(spec.substr(7));
    const BoundFn& f = agnostic ? rb : mb;
    out.rows.push_back(make_row("expert.(MP+c+1)*B(T/(c+1)+1)",
                                (mp + c + 1.0) * f.eval(T / (c + 1.0) + 1.0),
                                measured, se));
    out.rows.push_back(make_row("expert.info_no_plus1",
                                (mp + c + 1.0) * f.eval(T / (c + 1.0)),
                                measured, se, false));
  } else if (spec == "meta") {
    if (agnostic) {
      const double bound = 2.0 * (mp + 1.0) * rb.eval(T / (mp + 1.0) + 1.0) +
                           std::sqrt(T * std::log2(T));
      out.rows.push_back(make_row("meta.agnostic_regret", bound, measured, se));
    } else {
      out.rows.push_back(
          make_row("meta.6((MP+1)*MB(T/(MP+1)+1)+log2T)",
                   meta_bound(mp, mb, true), measured, se));
      out.rows.push_back(make_row("meta.info_no_plus1",
                                  meta_bound(mp, mb, false), measured, se,
                                  false));
    }
  } else if (spec == "combined") {
    double envelope = (mp + 1.0) * mb.eval(T);
    out.rows.push_back(make_row("combined.restart_arm", (mp + 1.0) * mb.eval(T),
                                measured, se, false));
    const double iii = meta_bound(mp, mb, true);
    out.rows.push_back(make_row("combined.meta_arm", iii, measured, se, false));
    envelope = std::min(envelope, iii);
    if (!H.is_threshold() && H.finite_table().size() <= 64 &&
        H.finite_table().domain_size() <= 16) {
      const double ldim =
          static_cast<double>(littlestone_dimension(H.finite_table()));
      out.rows.push_back(make_row("combined.ldim_arm", ldim, measured, se, false));
      envelope = std::min(envelope, ldim);
    }
    out.rows.push_back(
        make_row("combined.envelope:3min+5", 3.0 * envelope + 5.0, measured, se));
  } else if (spec == "combined-agnostic") {
    const double n_baseline =
        H.is_threshold() ? T + 1.0
                         : static_cast<double>(H.finite_table().size());
    const double baseline = std::sqrt(T / 2.0 * std::log(n_baseline));
    const double ii = 2.0 * (mp + 1.0) * rb.eval(T / (mp + 1.0) + 1.0) +
                      std::sqrt(T * std::log2(T));
    out.rows.push_back(make_row("agnostic.baseline_arm", baseline,
                                report.mean_regret, report.se_regret, false));
    out.rows.push_back(make_row("agnostic.meta_arm", ii, report.mean_regret,
                                report.se_regret, false));
    out.rows.push_back(make_row("agnostic.envelope:min+sqrtT",
                                std::min(baseline, ii) + std::sqrt(T),
                                report.mean_regret, report.se_regret));
  } else {
    throw ConfigError("no bound rows defined for learner " + spec);
  }
  return out;
}

BoundReport run_lower_bound(const GameConfig& cfg) {
  if (cfg.stream_kind != "nature-zn")
    throw ConfigError("lower bound needs the nature-zn stream source");
  if (cfg.class_kind != "threshold")
    throw ConfigError("lower bound is defined for the threshold class");
  const ZnParams params = ZnParams::create(cfg.T, cfg.zn_n);
  const HypothesisClass H = cfg.build_class();
  std::unique_ptr<OnlineLearner> learner =
      make_learner(cfg.learner_spec, H, cfg.T, cfg.resolved_mode());
  const PeeksResult result = nature_peeks_game(*learner, params, false);

  BoundReport out;
  const double bound = lower_bound_value(params);
  BoundRow forced;
  forced.name = "lowerbound.forced>=bound";
  forced.analytic = bound;
  forced.measured = result.forced_expected_mistakes;
  forced.pass = result.forced_expected_mistakes >= bound - 1e-9;
  out.rows.push_back(forced);

  BoundRow membership;
  membership.name = "lowerbound.generator_membership";
  membership.analytic = 1.0;
  const StreamLevels regen = stream_gen(params, result.indices);
  membership.measured =
      regen.examples() == result.stream.xs ? 1.0 : 0.0;
  membership.pass = membership.measured == 1.0;
  out.rows.push_back(membership);

  BoundRow realizable;
  realizable.name = "lowerbound.realizable";
  realizable.analytic = 1.0;
  realizable.measured =
      !result.final_version.empty() &&
              best_in_hindsight(H, result.stream) == 0
          ? 1.0
          : 0.0;
  realizable.pass = realizable.measured == 1.0;
  out.rows.push_back(realizable);

  BoundRow shatter;
  shatter.name = "lowerbound.block_shattering";
  shatter.analytic = 1.0;
  bool all_shattered = true;
  const int block = params.block();
  for (int i = 0; i <= params.n; ++i) {
    std::vector<Rat> pts;
    for (int t = i * block; t < (i + 1) * block; ++t)
      pts.push_back(result.stream.xs[t].value);
    std::sort(pts.begin(), pts.end());
    if (!threshold_shatter_check(result.entering[i], pts))
      all_shattered = false;
  }
  shatter.measured = all_shattered ? 1.0 : 0.0;
  shatter.pass = all_shattered;
  out.rows.push_back(shatter);

  BoundRow pm;
  pm.name = "lowerbound.predictor_mistakes==n";
  pm.analytic = static_cast<double>(params.n);
  pm.measured = static_cast<double>(result.predictor_mistake_rounds.size());
  bool schedule_ok =
      static_cast<int>(result.predictor_mistake_rounds.size()) == params.n;
  for (std::size_t i = 0; i < result.predictor_mistake_rounds.size(); ++i)
    if (result.predictor_mistake_rounds[i] !=
        static_cast<int>(i + 1) * block + 1)
      schedule_ok = false;
  pm.pass = schedule_ok;
  out.rows.push_back(pm);
  return out;
}

SweepResult sweep(const GameConfig& base, const std::string& axis,
                  const std::vector<long>& values, bool couple_k_sqrt) {
  if (values.empty()) throw ConfigError("sweep: empty axis");
  if (axis != "k" && axis != "T") throw ConfigError("sweep: axis must be k or T");
  SweepResult out;
  out.axis = axis;
  double prev_ratio = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    GameConfig cfg = base;
    if (axis == "k") {
      cfg.predictor_kind = "corrupting";
      cfg.corrupt_k = static_cast<int>(values[i]);
    } else {
      cfg.T = static_cast<int>(values[i]);
      if (couple_k_sqrt) {
        cfg.predictor_kind = "corrupting";
        cfg.corrupt_k = static_cast<int>(
            std::ceil(std::sqrt(static_cast<double>(cfg.T))));
      }
    }
    const RunReport report = run_game(cfg);
    const BoundReport bounds = evaluate_bounds(report);
    double bound = 0.0;
    for (const BoundRow& r : bounds.rows)
      if (r.asserted) bound = r.analytic;
    SweepPoint p;
    p.axis_value = values[i];
    p.mean = report.mean_mistakes;
    p.se = report.se_mistakes;
    p.bound = bound;
    p.mean_over_T = report.mean_mistakes / static_cast<double>(cfg.T);
    if (axis == "T" && i > 0 && p.mean_over_T >= prev_ratio)
      out.sublinear = false;
    prev_ratio = p.mean_over_T;
    out.points.push_back(p);
  }
  return out;
}

std::string SweepResult::csv() const {
  std::ostringstream os;
  os << "axis_value,mean_expected_mistakes,stderr,analytic_bound,mean_over_T\n";
  for (const SweepPoint& p : points)
    os << p.axis_value << ',' << fmt(p.mean) << ',' << fmt(p.se) << ','
       << fmt(p.bound) << ',' << fmt(p.mean_over_T) << '\n';
  return os.str();
}

std::string SweepResult::svg() const {
  // Minimal line chart: measured and bound polylines over the axis.
  constexpr double W = 640, Hh = 400, ml = 60, mr = 20, mt = 20, mb = 40;
  double xmin = 1e300, xmax = -1e300, ymax = 1e-9;
  for (const SweepPoint& p : points) {
    xmin = std::min(xmin, static_cast<double>(p.axis_value));
    xmax = std::max(xmax, static_cast<double>(p.axis_value));
    ymax = std::max({ymax, p.mean, p.bound});
  }
  if (xmax == xmin) xmax = xmin + 1;
  const auto px = [&](double v) {
    return ml + (v - xmin) / (xmax - xmin) * (W - ml - mr);
  };
  const auto py = [&](double v) { return Hh - mb - v / ymax * (Hh - mt - mb); };
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='"
     << Hh << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  os << "<line x1='" << ml << "' y1='" << Hh - mb << "' x2='" << W - mr
     << "' y2='" << Hh - mb << "' stroke='black'/>\n";
  os << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='"
     << Hh - mb << "' stroke='black'/>\n";
  const auto polyline = [&](const char* color, bool bound_series) {
    os << "<polyline fill='none' stroke='" << color << "' points='";
    for (const SweepPoint& p : points)
      os << fmt(px(static_cast<double>(p.axis_value))) << ','
         << fmt(py(bound_series ? p.bound : p.mean)) << ' ';
    os << "'/>\n";
  };
  polyline("steelblue", false);
  polyline("firebrick", true);
  for (const SweepPoint& p : points)
    os << "<text x='" << fmt(px(static_cast<double>(p.axis_value))) << "' y='"
       << Hh - mb + 16 << "' font-size='11' text-anchor='middle'>"
       << p.axis_value << "</text>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = ymax * i / 4.0;
    os << "<text x='" << ml - 6 << "' y='" << fmt(py(v) + 4)
       << "' font-size='11' text-anchor='end'>" << fmt(v) << "</text>\n";
  }
  os << "<text x='" << ml + 10 << "' y='" << mt + 12
     << "' font-size='12' fill='steelblue'>measured mean</text>\n";
  os << "<text x='" << ml + 10 << "' y='" << mt + 28
     << "' font-size='12' fill='firebrick'>analytic bound</text>\n";
  os << "<text x='" << (W - mr - 4) << "' y='" << Hh - 8
     << "' font-size='12' text-anchor='end'>" << axis << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string transcript_csv(const RunReport& report) {
  std::ostringstream os;
  os << "trial,t,x,y,pred_dist,mistake_prob,predictor_mistake,learner,seed\n";
  for (std::size_t trial = 0; trial < report.trials.size(); ++trial) {
    const TrialResult& res = report.trials[trial];
    for (const RoundRecord& r : res.transcript.rounds) {
      os << trial << ',' << r.t << ',' << r.x.str() << ',' << r.y << ',';
      for (std::size_t i = 0; i < r.prediction.size(); ++i) {
        if (i) os << '|';
        os << fmt(r.prediction[i]);
      }
      os << ',' << fmt(1.0 - r.prediction[r.y]) << ','
         << (r.predictor_mistake ? 1 : 0) << ',' << report.cfg.learner_spec
         << ',' << res.trial_seed << '\n';
    }
  }
  return os.str();
}

std::string bounds_csv(const BoundReport& report) {
  std::ostringstream os;
  os << "bound_name,analytic,measured_mean,stderr,pass\n";
  for (const BoundRow& r : report.rows)
    os << r.name << ',' << fmt(r.analytic) << ',' << fmt(r.measured) << ','
       << fmt(r.se) << ',' << (r.pass ? 1 : 0) << '\n';
  return os.str();
}

}  // namespace prescient
