#include "prescient/aggregate.hpp"

#include <algorithm>
#include <cmath>

namespace prescient {

namespace {

// Sum of powers of two as an exact big binary number, for plurality votes.
struct Pow2Sum {
  std::vector<std::uint64_t> limbs;

  void add_exp(int e) {
    const std::size_t word = e / 64;
    if (limbs.size() <= word) limbs.resize(word + 1, 0);
    std::uint64_t carry = 1ULL << (e % 64);
    for (std::size_t i = word; carry; ++i) {
      if (limbs.size() <= i) limbs.resize(i + 1, 0);
      const std::uint64_t before = limbs[i];
      limbs[i] += carry;
      carry = limbs[i] < before ? 1 : 0;
    }
  }

  int cmp(const Pow2Sum& o) const {
    const std::size_t n = std::max(limbs.size(), o.limbs.size());
    for (std::size_t i = n; i-- > 0;) {
      const std::uint64_t a = i < limbs.size() ? limbs[i] : 0;
      const std::uint64_t b = i < o.limbs.size() ? o.limbs[i] : 0;
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }
};

}  // namespace

Dwma::Dwma(int n_experts) : mistakes_(n_experts, 0) {
  if (n_experts < 1) throw StructuralError("DWMA needs at least one expert");
}

Label Dwma::predict(std::span<const Label> advice) const {
  if (static_cast<int>(advice.size()) != experts())
    throw StructuralError("DWMA advice length mismatch");
  Label max_label = 0;
  for (Label a : advice) {
    if (a < 0) throw StructuralError("DWMA advice label negative");
    max_label = std::max(max_label, a);
  }
  const long max_m = *std::max_element(mistakes_.begin(), mistakes_.end());
  // Scale all weights by 2^{max_m}: expert i contributes 2^{max_m - m_i}.
  std::vector<Pow2Sum> votes(max_label + 1);
  for (int i = 0; i < experts(); ++i)
    votes[advice[i]].add_exp(static_cast<int>(max_m - mistakes_[i]));
  Label best = 0;
  for (Label y = 1; y <= max_label; ++y)
    if (votes[y].cmp(votes[best]) > 0) best = y;
  return best;
}

void Dwma::update(std::span<const Label> advice, Label y) {
  if (static_cast<int>(advice.size()) != experts())
    throw StructuralError("DWMA advice length mismatch");
  for (int i = 0; i < experts(); ++i)
    if (advice[i] != y) ++mistakes_[i];
}

Rewa::Rewa(int n_experts, int horizon) : logw_(n_experts, 0.0) {
  if (n_experts < 1) throw StructuralError("REWA needs at least one expert");
  if (horizon < 1) throw StructuralError("REWA needs a positive horizon");
  eta_ = std::sqrt(8.0 * std::log(static_cast<double>(n_experts)) /
                   static_cast<double>(horizon));
}

std::vector<double> Rewa::expert_distribution() const {
  const double mx = *std::max_element(logw_.begin(), logw_.end());
  std::vector<double> dist(logw_.size());
  double total = 0.0;
  for (std::size_t i = 0; i < logw_.size(); ++i) {
    dist[i] = std::exp(logw_[i] - mx);
    total += dist[i];
  }
  for (double& p : dist) p /= total;
  return dist;
}

int Rewa::sample(Rng& rng) const {
  const std::vector<double> dist = expert_distribution();
  double u = rng.unit();
  for (std::size_t i = 0; i < dist.size(); ++i) {
    u -= dist[i];
    if (u < 0) return static_cast<int>(i);
  }
  return static_cast<int>(dist.size()) - 1;
}

void Rewa::update(std::span<const double> losses) {
  if (losses.size() != logw_.size())
    throw StructuralError("REWA loss vector length mismatch");
  for (std::size_t i = 0; i < logw_.size(); ++i) {
    if (losses[i] < -1e-12 || losses[i] > 1.0 + 1e-12)
      throw StructuralError("REWA loss outside [0,1]");
    logw_[i] -= eta_ * losses[i];
  }
}

}  // namespace prescient
