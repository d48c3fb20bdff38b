#pragma once

#include <span>
#include <vector>

#include "prescient/core.hpp"
#include "prescient/rng.hpp"

namespace prescient {

// Deterministic weighted majority with learning rate 1/2. Expert i's weight
// is exactly 2^{-m_i} where m_i is its mistake count, so the state is the
// vector of counts and plurality votes are compared exactly, never through
// floating point.
class Dwma {
 public:
  explicit Dwma(int n_experts);

  int experts() const { return static_cast<int>(mistakes_.size()); }
  const std::vector<long>& mistake_counts() const { return mistakes_; }

  // Weighted-plurality label; ties go to the smaller label value.
  Label predict(std::span<const Label> advice) const;
  void update(std::span<const Label> advice, Label y);

 private:
  std::vector<long> mistakes_;
};

// Randomized exponential weights with learning rate sqrt(8 ln N / T).
// Losses may be any values in [0,1]; the canonical use is 0-1.
class Rewa {
 public:
  Rewa(int n_experts, int horizon);

  int experts() const { return static_cast<int>(logw_.size()); }
  double rate() const { return eta_; }

  std::vector<double> expert_distribution() const;
  int sample(Rng& rng) const;
  void update(std::span<const double> losses);

 private:
  std::vector<double> logw_;
  double eta_;
};

}  // namespace prescient
