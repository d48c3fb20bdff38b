#include "prescient/rng.hpp"

#include <algorithm>

#include "prescient/core.hpp"

namespace prescient {

std::vector<std::int64_t> Rng::sample_distinct(std::int64_t lo,
                                               std::int64_t hi, int k) {
  std::vector<std::int64_t> pool;
  for (std::int64_t v = lo; v <= hi; ++v) pool.push_back(v);
  if (k > static_cast<int>(pool.size()))
    throw StructuralError("sample_distinct: k larger than range");
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::int64_t>(below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace prescient
