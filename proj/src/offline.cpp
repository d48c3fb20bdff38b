#include "prescient/offline.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace prescient {

double BoundFn::eval(double T) const {
  switch (kind) {
    case Kind::Constant: return coeff;
    case Kind::LogT: return coeff * std::log2(T + 1.0);
    case Kind::SqrtTLogT: return coeff * std::sqrt(T * std::log2(T + 1.0));
  }
  return 0.0;
}

std::string BoundFn::str() const {
  char buf[64];
  switch (kind) {
    case Kind::Constant: std::snprintf(buf, sizeof buf, "%.6g", coeff); break;
    case Kind::LogT: std::snprintf(buf, sizeof buf, "%.6g*log2(T+1)", coeff); break;
    case Kind::SqrtTLogT:
      std::snprintf(buf, sizeof buf, "%.6g*sqrt(T*log2(T+1))", coeff);
      break;
  }
  return buf;
}

BoundFn offline_bound(const HypothesisClass& H, OfflineMode mode) {
  BoundFn f;
  if (mode == OfflineMode::RealizableHalving) {
    if (H.is_threshold()) {
      // Halving over at most T+1 threshold behaviors.
      f.kind = BoundFn::Kind::LogT;
      f.coeff = 1.0;
    } else {
      f.kind = BoundFn::Kind::Constant;
      f.coeff = std::log2(static_cast<double>(H.finite_table().size()));
    }
  } else {
    f.kind = BoundFn::Kind::SqrtTLogT;
    if (H.is_threshold()) {
      f.coeff = 1.0;
    } else {
      // Exponential weights over |H| behaviors: regret <= sqrt(T/2 ln|H|),
      // absorbed into the sqrt(T log2(T+1)) form via log2(T+1) >= 1.
      f.coeff = std::sqrt(std::log(static_cast<double>(H.finite_table().size())) / 2.0);
    }
  }
  return f;
}

OfflineLearner::OfflineLearner(const HypothesisClass& H,
                               std::vector<Example> xs, OfflineMode mode)
    : seq_(std::move(xs)), mode_(mode), label_count_(H.label_count()) {
  if (seq_.empty()) throw StructuralError("offline learner: empty sequence");
  pos_col_.assign(seq_.size(), -1);

  if (H.is_threshold()) {
    std::vector<Example> evaluable;
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      if (seq_[i].is_atom()) continue;  // dead column
      pos_col_[i] = static_cast<int>(evaluable.size());
      evaluable.push_back(seq_[i]);
    }
    if (evaluable.empty())
      rows_.push_back({});
    else
      rows_ = project(H, evaluable).table;
  } else {
    const FiniteTable& t = H.finite_table();
    // Columns for the positions the table can evaluate; the rest stay dead.
    std::vector<int> live_cols;
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      int col = -1;
      for (int d = 0; d < t.domain_size(); ++d)
        if (t.domain[d] == seq_[i]) { col = d; break; }
      if (col >= 0) {
        pos_col_[i] = static_cast<int>(live_cols.size());
        live_cols.push_back(col);
      }
    }
    for (const auto& h : t.table) {
      std::vector<Label> row;
      row.reserve(live_cols.size());
      for (int c : live_cols) row.push_back(h[c]);
      if (std::find(rows_.begin(), rows_.end(), row) == rows_.end())
        rows_.push_back(std::move(row));
    }
  }

  if (mode_ == OfflineMode::RealizableHalving) {
    alive_.assign(rows_.size(), 1);
  } else {
    logw_.assign(rows_.size(), 0.0);
    eta_ = std::sqrt(8.0 * std::log(static_cast<double>(rows_.size())) /
                     static_cast<double>(seq_.size()));
  }
}

int OfflineLearner::surviving() const {
  if (mode_ != OfflineMode::RealizableHalving)
    throw CapabilityError("surviving() is a halving-mode query");
  return static_cast<int>(std::count(alive_.begin(), alive_.end(), 1));
}

std::vector<double> OfflineLearner::predict() const {
  if (cursor_ > horizon())
    throw StructuralError("offline learner queried past its horizon");
  const int col = pos_col_[cursor_ - 1];
  if (col < 0)
    throw ContractError("offline learner queried at an unevaluable position");
  std::vector<double> dist(label_count_, 0.0);
  if (mode_ == OfflineMode::RealizableHalving) {
    std::vector<long> votes(label_count_, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (alive_[r]) ++votes[rows_[r][col]];
    int best = 0;
    for (int y = 1; y < label_count_; ++y)
      if (votes[y] > votes[best]) best = y;
    dist[best] = 1.0;
  } else {
    const double mx = *std::max_element(logw_.begin(), logw_.end());
    double total = 0.0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const double w = std::exp(logw_[r] - mx);
      dist[rows_[r][col]] += w;
      total += w;
    }
    for (double& p : dist) p /= total;
  }
  return dist;
}

void OfflineLearner::update(Label y) {
  if (cursor_ > horizon())
    throw StructuralError("offline learner updated past its horizon");
  const int col = pos_col_[cursor_ - 1];
  if (col < 0)
    throw ContractError("offline learner updated at an unevaluable position");
  if (y < 0 || y >= label_count_)
    throw StructuralError("offline learner: label outside alphabet");
  if (mode_ == OfflineMode::RealizableHalving) {
    bool any = false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (alive_[r] && rows_[r][col] != y) alive_[r] = 0;
      any = any || alive_[r];
    }
    if (!any)
      throw RealizabilityError("halving version space emptied by label " +
                               std::to_string(y));
  } else {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (rows_[r][col] != y) logw_[r] -= eta_;
  }
  ++cursor_;
}

long best_in_hindsight(const HypothesisClass& H, const LabeledStream& stream) {
  stream.validate();
  const FiniteTable proj = project(H, stream.xs);
  long best = stream.horizon();
  for (const auto& row : proj.table) {
    long loss = 0;
    for (int t = 0; t < stream.horizon(); ++t)
      if (row[t] != stream.ys[t]) ++loss;
    best = std::min(best, loss);
  }
  return best;
}

}  // namespace prescient
