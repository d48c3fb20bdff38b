#include "prescient/learners.hpp"

#include <algorithm>
#include <cmath>

namespace prescient {

namespace {

std::vector<double> point_mass(Label y, int label_count) {
  std::vector<double> dist(label_count, 0.0);
  dist[y] = 1.0;
  return dist;
}

Label point_mass_label(const std::vector<double>& dist) {
  for (std::size_t y = 0; y < dist.size(); ++y)
    if (dist[y] == 1.0) return static_cast<Label>(y);
  throw ContractError("expected a point-mass prediction");
}

bool within_soa_guards(const FiniteTable& t) {
  return t.size() <= 64 && t.domain_size() <= 16;
}

}  // namespace

SoaLearner::SoaLearner(std::shared_ptr<const FiniteTable> table)
    : oracle_(std::move(table)), alive_(oracle_.full_mask()) {}

std::vector<double> SoaLearner::predict(const Example& x,
                                        std::span<const Example>) {
  last_col_ = oracle_.table().domain_index(x);
  const int K = label_count();
  Label best = -1;
  int best_score = -1;
  for (Label y = 0; y < K; ++y) {
    const std::uint64_t rest = oracle_.restrict_mask(alive_, last_col_, y);
    if (!rest) continue;
    const int score = oracle_.ldim(rest);
    if (score > best_score) {
      best_score = score;
      best = y;
    }
  }
  if (best < 0) throw RealizabilityError("SOA version space is empty");
  return point_mass(best, K);
}

void SoaLearner::update(Label y) {
  if (last_col_ < 0) throw ContractError("SOA updated before predicting");
  alive_ = oracle_.restrict_mask(alive_, last_col_, y);
  if (!alive_)
    throw RealizabilityError("SOA: label " + std::to_string(y) +
                             " emptied the version space");
}

int SoaLearner::surviving() const { return std::popcount(alive_); }

RestartLearner::RestartLearner(HypothesisClass H, int horizon,
                               OfflineMode mode)
    : H_(std::move(H)), horizon_(horizon), mode_(mode) {
  if (horizon_ < 1) throw StructuralError("restart learner: horizon < 1");
}

std::vector<double> RestartLearner::predict(const Example& x,
                                            std::span<const Example> predicted) {
  ++t_;
  if (t_ > horizon_) throw StructuralError("restart learner past horizon");
  if (static_cast<int>(predicted.size()) != horizon_)
    throw ContractError("restart learner: prediction length != horizon");
  if (predicted[t_ - 1] != x)
    throw ContractError("restart learner: inconsistent prediction prefix");
  const bool fresh = t_ == 1 || prev_pred_[t_ - 1] != x;
  if (fresh) {
    std::vector<Example> suffix(predicted.begin() + (t_ - 1), predicted.end());
    active_ = std::make_unique<OfflineLearner>(H_, std::move(suffix), mode_);
    ++instances_;
  }
  if (active_->current() != x)
    throw ContractError("restart learner: off-sequence offline query");
  prev_pred_.assign(predicted.begin(), predicted.end());
  return active_->predict();
}

void RestartLearner::update(Label y) {
  if (!active_) throw ContractError("restart learner updated before predicting");
  active_->update(y);
}

ExpertLearner::ExpertLearner(HypothesisClass H, int horizon, int c,
                             OfflineMode mode)
    : H_(std::move(H)), horizon_(horizon), c_(c), mode_(mode) {
  if (c_ < 0 || c_ > horizon_ - 1)
    throw StructuralError("expert parameter outside {0..T-1}");
  block_ = (horizon_ + c_) / (c_ + 1);  // ceil(T/(c+1))
}

std::vector<double> ExpertLearner::predict(const Example& x,
                                           std::span<const Example> predicted) {
  ++t_;
  if (t_ > horizon_) throw StructuralError("expert learner past horizon");
  const int i = (t_ - 1) / block_;
  const int begin = i * block_;
  const int end = std::min((i + 1) * block_, horizon_);
  if (t_ == begin + 1)
    inner_ = std::make_unique<RestartLearner>(H_, end - begin, mode_);
  return inner_->predict(x, predicted.subspan(begin, end - begin));
}

void ExpertLearner::update(Label y) {
  if (!inner_) throw ContractError("expert learner updated before predicting");
  inner_->update(y);
}

MetaLearner::MetaLearner(HypothesisClass H, int horizon, OfflineMode mode)
    : H_(std::move(H)), mode_(mode) {
  for (int c = 0; c < horizon; ++c)
    experts_.push_back(std::make_unique<ExpertLearner>(H_, horizon, c, mode_));
  if (mode_ == OfflineMode::RealizableHalving)
    dwma_ = std::make_unique<Dwma>(horizon);
  else
    rewa_ = std::make_unique<Rewa>(horizon, horizon);
}

std::vector<double> MetaLearner::predict(const Example& x,
                                         std::span<const Example> predicted) {
  const int K = label_count();
  if (mode_ == OfflineMode::RealizableHalving) {
    advice_.clear();
    for (auto& e : experts_)
      advice_.push_back(point_mass_label(e->predict(x, predicted)));
    return point_mass(dwma_->predict(advice_), K);
  }
  expert_dists_.clear();
  for (auto& e : experts_) expert_dists_.push_back(e->predict(x, predicted));
  const std::vector<double> p = rewa_->expert_distribution();
  std::vector<double> dist(K, 0.0);
  for (std::size_t c = 0; c < experts_.size(); ++c)
    for (int y = 0; y < K; ++y) dist[y] += p[c] * expert_dists_[c][y];
  return dist;
}

void MetaLearner::update(Label y) {
  if (mode_ == OfflineMode::RealizableHalving) {
    dwma_->update(advice_, y);
  } else {
    std::vector<double> losses;
    losses.reserve(expert_dists_.size());
    for (const auto& d : expert_dists_) losses.push_back(1.0 - d[y]);
    rewa_->update(losses);
  }
  for (auto& e : experts_) e->update(y);
}

CombinedRealizableLearner::CombinedRealizableLearner(HypothesisClass H,
                                                     int horizon)
    : H_(std::move(H)), dwma_(1) {
  if (!H_.is_threshold() && within_soa_guards(H_.finite_table())) {
    experts_.push_back(std::make_unique<SoaLearner>(H_.finite_table_ptr()));
    has_soa_ = true;
  }
  experts_.push_back(std::make_unique<RestartLearner>(
      H_, horizon, OfflineMode::RealizableHalving));
  experts_.push_back(
      std::make_unique<MetaLearner>(H_, horizon, OfflineMode::RealizableHalving));
  dwma_ = Dwma(static_cast<int>(experts_.size()));
}

std::vector<double> CombinedRealizableLearner::predict(
    const Example& x, std::span<const Example> predicted) {
  advice_.clear();
  for (auto& e : experts_)
    advice_.push_back(point_mass_label(e->predict(x, predicted)));
  return point_mass(dwma_.predict(advice_), label_count());
}

void CombinedRealizableLearner::update(Label y) {
  dwma_.update(advice_, y);
  for (auto& e : experts_) e->update(y);
}

namespace {

// Exponential weights straight over the rows of a finite table.
class TableEwLearner final : public OnlineLearner {
 public:
  TableEwLearner(std::shared_ptr<const FiniteTable> table, int horizon)
      : table_(std::move(table)), rewa_(table_->size(), horizon) {}
  std::vector<double> predict(const Example& x,
                              std::span<const Example>) override {
    last_col_ = table_->domain_index(x);
    const std::vector<double> p = rewa_.expert_distribution();
    std::vector<double> dist(table_->label_count, 0.0);
    for (int r = 0; r < table_->size(); ++r)
      dist[table_->table[r][last_col_]] += p[r];
    return dist;
  }
  void update(Label y) override {
    std::vector<double> losses(table_->size());
    for (int r = 0; r < table_->size(); ++r)
      losses[r] = table_->table[r][last_col_] == y ? 0.0 : 1.0;
    rewa_.update(losses);
  }
  int label_count() const override { return table_->label_count; }

 private:
  std::shared_ptr<const FiniteTable> table_;
  Rewa rewa_;
  int last_col_ = -1;
};

// Exponential weights over the threshold representatives induced by the
// first round's predicted sequence. Representatives are genuine hypotheses,
// so later examples anywhere in [0,1] are evaluable.
class ProjectedEwLearner final : public OnlineLearner {
 public:
  explicit ProjectedEwLearner(int horizon) : horizon_(horizon) {}
  std::vector<double> predict(const Example& x,
                              std::span<const Example> predicted) override {
    if (!rewa_) {
      std::vector<Example> pts;
      for (const Example& e : predicted)
        if (!e.is_atom()) pts.push_back(e);
      const FiniteTable proj =
          project(HypothesisClass::thresholds(), pts);
      reps_ = proj.reps;
      rewa_ = std::make_unique<Rewa>(static_cast<int>(reps_.size()), horizon_);
    }
    last_x_ = x;
    const std::vector<double> p = rewa_->expert_distribution();
    std::vector<double> dist(2, 0.0);
    for (std::size_t r = 0; r < reps_.size(); ++r)
      dist[evaluate_threshold(reps_[r], x)] += p[r];
    return dist;
  }
  void update(Label y) override {
    std::vector<double> losses(reps_.size());
    for (std::size_t r = 0; r < reps_.size(); ++r)
      losses[r] = evaluate_threshold(reps_[r], last_x_) == y ? 0.0 : 1.0;
    rewa_->update(losses);
  }
  int label_count() const override { return 2; }

 private:
  int horizon_;
  std::vector<Rat> reps_;
  std::unique_ptr<Rewa> rewa_;
  Example last_x_;
};

}  // namespace

CombinedAgnosticLearner::CombinedAgnosticLearner(HypothesisClass H,
                                                 int horizon)
    : H_(std::move(H)), rewa_(2, horizon) {
  if (H_.is_threshold())
    experts_.push_back(std::make_unique<ProjectedEwLearner>(horizon));
  else
    experts_.push_back(
        std::make_unique<TableEwLearner>(H_.finite_table_ptr(), horizon));
  experts_.push_back(
      std::make_unique<MetaLearner>(H_, horizon, OfflineMode::AgnosticRewa));
}

std::vector<double> CombinedAgnosticLearner::predict(
    const Example& x, std::span<const Example> predicted) {
  expert_dists_.clear();
  for (auto& e : experts_) expert_dists_.push_back(e->predict(x, predicted));
  const std::vector<double> p = rewa_.expert_distribution();
  std::vector<double> dist(label_count(), 0.0);
  for (std::size_t i = 0; i < experts_.size(); ++i)
    for (int y = 0; y < label_count(); ++y)
      dist[y] += p[i] * expert_dists_[i][y];
  return dist;
}

void CombinedAgnosticLearner::update(Label y) {
  std::vector<double> losses;
  losses.reserve(expert_dists_.size());
  for (const auto& d : expert_dists_) losses.push_back(1.0 - d[y]);
  rewa_.update(losses);
  for (auto& e : experts_) e->update(y);
}

SoaProjectionLearner::SoaProjectionLearner(HypothesisClass H)
    : version_(VersionSpace::thresholds()) {
  if (!H.is_threshold())
    throw DomainMismatchError("soa-projection requires the threshold class");
}

std::vector<double> SoaProjectionLearner::predict(
    const Example& x, std::span<const Example> predicted) {
  ++t_;
  last_x_ = x;
  if (x.is_star() || version_.empty()) return point_mass(0, 2);

  // Window: predicted points from the current round up to the star padding.
  std::vector<Rat> pts;
  for (std::size_t s = t_ - 1; s < predicted.size(); ++s) {
    if (predicted[s].is_star()) break;
    if (predicted[s].is_point()) pts.push_back(predicted[s].value);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (static_cast<int>(pts.size()) > 16)
    throw CapabilityError("soa-projection window beyond Ldim guard");

  // Behaviors of the surviving interval on the window: one row per gap that
  // meets [lo, hi).
  const ThresholdInterval& iv = version_.interval();
  FiniteTable tbl;
  tbl.label_count = 2;
  for (const Rat& p : pts) tbl.domain.push_back(Example::point(p));
  for (std::size_t g = 0; g <= pts.size(); ++g) {
    const bool has_glo = g > 0;
    const bool has_ghi = g < pts.size();
    const Rat glo = has_glo ? pts[g - 1] : Rat(0);
    const Rat ghi = has_ghi ? pts[g] : Rat(0);
    bool meets = true;
    if (iv.hi && has_glo && !(glo < *iv.hi)) meets = false;
    if (iv.lo && has_ghi && !(*iv.lo < ghi)) meets = false;
    if (!meets) continue;
    std::vector<Label> row;
    row.reserve(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) row.push_back(j < g ? 1 : 0);
    tbl.table.push_back(std::move(row));
  }
  if (tbl.table.empty()) return point_mass(0, 2);

  LdimOracle oracle(std::make_shared<const FiniteTable>(std::move(tbl)));
  const int col = oracle.table().domain_index(x);
  Label best = -1;
  int best_score = -1;
  for (Label y = 0; y < 2; ++y) {
    const std::uint64_t rest =
        oracle.restrict_mask(oracle.full_mask(), col, y);
    if (!rest) continue;
    const int score = oracle.ldim(rest);
    if (score > best_score) {
      best_score = score;
      best = y;
    }
  }
  return point_mass(best < 0 ? 0 : best, 2);
}

void SoaProjectionLearner::update(Label y) {
  if (t_ == 0) throw ContractError("soa-projection updated before predicting");
  version_ = version_.restrict(last_x_, y);
}

std::unique_ptr<OnlineLearner> make_learner(const std::string& spec,
                                            const HypothesisClass& H,
                                            int horizon, OfflineMode mode) {
  if (spec == "soa") {
    if (H.is_threshold())
      throw CapabilityError("soa requires a finite table; use soa-projection");
    return std::make_unique<SoaLearner>(H.finite_table_ptr());
  }
  if (spec == "soa-projection") return std::make_unique<SoaProjectionLearner>(H);
  if (spec == "restart")
    return std::make_unique<RestartLearner>(H, horizon, mode);
  if (spec.rfind("expert:", 0) == 0) {
    const int c = std::stoi(spec.substr(7));
    return std::make_unique<ExpertLearner>(H, horizon, c, mode);
  }
  if (spec == "meta") return std::make_unique<MetaLearner>(H, horizon, mode);
  if (spec == "combined")
    return std::make_unique<CombinedRealizableLearner>(H, horizon);
  if (spec == "combined-agnostic")
    return std::make_unique<CombinedAgnosticLearner>(H, horizon);
  throw ConfigError("unknown learner spec: " + spec);
}

}  // namespace prescient
