#pragma once

#include <cstdint>
#include <vector>

namespace prescient {

// Counter-based splitmix64. Every stochastic component draws from an Rng
// seeded through trial_seed, so runs replay exactly from (config, seed).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  std::uint64_t s = master ^ (trial * 0xD1342543DE82EF95ULL + 1);
  std::uint64_t a = splitmix64(s);
  return splitmix64(s) ^ a;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64(state_); }

  // Uniform in [0, n), rejection-sampled.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool coin(double p) { return unit() < p; }

  // k distinct values from [lo, hi], ascending.
  std::vector<std::int64_t> sample_distinct(std::int64_t lo, std::int64_t hi,
                                            int k);

 private:
  std::uint64_t state_;
};

}  // namespace prescient
