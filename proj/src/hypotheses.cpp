#include "prescient/hypotheses.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "json.hpp"

namespace prescient {

int FiniteTable::domain_index(const Example& x) const {
  for (int i = 0; i < domain_size(); ++i)
    if (domain[i] == x) return i;
  throw DomainMismatchError("example not in table domain: " + x.str());
}

Label FiniteTable::evaluate(int row, const Example& x) const {
  if (row < 0 || row >= size())
    throw DomainMismatchError("bad hypothesis row " + std::to_string(row));
  return table[row][domain_index(x)];
}

Label evaluate_threshold(const Rat& a, const Example& x) {
  if (x.is_atom())
    throw DomainMismatchError("atom example against threshold class");
  if (x.is_star()) return 0;
  return x.value <= a ? 1 : 0;
}

namespace {

nlohmann::json example_to_json(const Example& e) {
  nlohmann::json j;
  if (e.is_point())
    j["point"] = e.value.str();
  else if (e.is_star())
    j["star"] = true;
  else
    j["atom"] = e.atom_id;
  return j;
}

Example example_from_json(const nlohmann::json& j) {
  if (j.contains("point")) return Example::point(Rat::parse(j["point"].get<std::string>()));
  if (j.contains("star")) return Example::star();
  if (j.contains("atom")) return Example::atom(j["atom"].get<std::uint32_t>());
  throw StructuralError("example JSON must have point/star/atom");
}

}  // namespace

std::string FiniteTable::to_json() const {
  nlohmann::json j;
  j["domain"] = nlohmann::json::array();
  for (const Example& e : domain) j["domain"].push_back(example_to_json(e));
  j["table"] = table;
  j["label_count"] = label_count;
  return j.dump();
}

FiniteTable FiniteTable::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  FiniteTable t;
  for (const auto& e : j.at("domain")) t.domain.push_back(example_from_json(e));
  t.table = j.at("table").get<std::vector<std::vector<Label>>>();
  t.label_count = j.value("label_count", 2);
  for (const auto& row : t.table) {
    if (row.size() != t.domain.size())
      throw StructuralError("table row length != domain size");
    for (Label y : row)
      if (y < 0 || y >= t.label_count)
        throw StructuralError("table label outside alphabet");
  }
  return t;
}

FiniteTable project(const HypothesisClass& H, std::span<const Example> xs) {
  if (xs.empty()) throw StructuralError("project: empty example sequence");
  FiniteTable out;
  out.domain.assign(xs.begin(), xs.end());

  std::vector<std::vector<Label>> rows;
  std::vector<Rat> reps;
  if (H.is_threshold()) {
    std::set<Rat> points;
    for (const Example& e : xs) {
      if (e.is_atom())
        throw DomainMismatchError("atom example against threshold class");
      if (e.is_point()) points.insert(e.value);
    }
    std::vector<Rat> sorted(points.begin(), points.end());
    // One canonical parameter per behavior gap: below, between, above.
    std::vector<Rat> params;
    if (sorted.empty()) {
      params.push_back(Rat(0));
    } else {
      params.push_back(sorted.front() - Rat(1));
      for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        params.push_back((sorted[i] + sorted[i + 1]) / Rat(2));
      params.push_back(sorted.back() + Rat(1));
    }
    // Parameters from distinct gaps induce pairwise distinct rows, so no
    // dedup pass is needed.
    for (const Rat& a : params) {
      std::vector<Label> row;
      row.reserve(xs.size());
      for (const Example& e : xs) row.push_back(evaluate_threshold(a, e));
      rows.push_back(std::move(row));
      reps.push_back(a);
    }
    out.label_count = 2;
  } else {
    const FiniteTable& t = H.finite_table();
    std::vector<int> cols;
    cols.reserve(xs.size());
    for (const Example& e : xs) cols.push_back(t.domain_index(e));
    for (const auto& h : t.table) {
      std::vector<Label> row;
      row.reserve(cols.size());
      for (int c : cols) row.push_back(h[c]);
      if (std::find(rows.begin(), rows.end(), row) == rows.end())
        rows.push_back(std::move(row));
    }
    out.label_count = t.label_count;
  }
  out.table = std::move(rows);
  out.reps = std::move(reps);
  return out;
}

namespace {

// All 2^d binary patterns realized on the columns `subset`?
bool shatters_binary(const FiniteTable& H, const std::vector<int>& subset) {
  const int d = static_cast<int>(subset.size());
  std::set<std::uint32_t> seen;
  for (const auto& row : H.table) {
    std::uint32_t pat = 0;
    bool binary = true;
    for (int i = 0; i < d; ++i) {
      const Label y = row[subset[i]];
      if (y > 1) { binary = false; break; }
      pat |= static_cast<std::uint32_t>(y) << i;
    }
    if (binary) seen.insert(pat);
  }
  return static_cast<int>(seen.size()) == (1 << d);
}

template <typename Check>
int largest_shattered(int n, int max_d, Check check) {
  int best = 0;
  std::vector<int> subset;
  // Enumerate subsets by size; stop at the first size with no witness.
  for (int d = 1; d <= std::min(n, max_d); ++d) {
    bool found = false;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      if (check(idx)) { found = true; break; }
      int pos = d - 1;
      while (pos >= 0 && idx[pos] == n - d + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) break;
    best = d;
  }
  return best;
}

}  // namespace

int vc_dimension(const FiniteTable& H) {
  if (H.domain_size() > 20)
    throw CapabilityError("vc_dimension: domain larger than brute-force guard");
  if (H.table.empty()) throw StructuralError("vc_dimension: empty class");
  return largest_shattered(H.domain_size(), H.domain_size(),
                           [&](const std::vector<int>& s) { return shatters_binary(H, s); });
}

LdimOracle::LdimOracle(std::shared_ptr<const FiniteTable> table)
    : table_(std::move(table)) {
  if (table_->size() > 64 || table_->domain_size() > 16)
    throw CapabilityError("littlestone_dimension: beyond brute-force guard");
  if (table_->table.empty())
    throw StructuralError("littlestone_dimension: empty class");
  full_mask_ = table_->size() == 64 ? ~0ULL : (1ULL << table_->size()) - 1;
}

std::uint64_t LdimOracle::restrict_mask(std::uint64_t mask, int col,
                                        Label y) const {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m;) {
    const int r = std::countr_zero(m);
    m &= m - 1;
    if (table_->table[r][col] == y) out |= 1ULL << r;
  }
  return out;
}

int LdimOracle::ldim(std::uint64_t mask) {
  if (mask == 0) return 0;
  if (std::popcount(mask) == 1) return 0;
  auto it = memo_.find(mask);
  if (it != memo_.end()) return it->second;
  int best = 0;
  const int K = table_->label_count;
  for (int col = 0; col < table_->domain_size(); ++col) {
    std::vector<std::uint64_t> by_label(K, 0);
    for (std::uint64_t m = mask; m;) {
      const int r = std::countr_zero(m);
      m &= m - 1;
      by_label[table_->table[r][col]] |= 1ULL << r;
    }
    for (int y0 = 0; y0 < K; ++y0) {
      if (!by_label[y0]) continue;
      for (int y1 = y0 + 1; y1 < K; ++y1) {
        if (!by_label[y1]) continue;
        const int sub = 1 + std::min(ldim(by_label[y0]), ldim(by_label[y1]));
        best = std::max(best, sub);
      }
    }
  }
  memo_[mask] = best;
  return best;
}

int littlestone_dimension(const FiniteTable& H) {
  LdimOracle oracle(std::make_shared<const FiniteTable>(H));
  return oracle.ldim(oracle.full_mask());
}

int natarajan_dimension(const FiniteTable& H) {
  if (H.domain_size() > 12)
    throw CapabilityError("natarajan_dimension: beyond brute-force guard");
  if (H.table.empty()) throw StructuralError("natarajan_dimension: empty class");
  const int K = H.label_count;
  // Witness pairs per coordinate are ordered distinct label pairs; a subset
  // is shattered when some assignment realizes all 2^d sigma patterns.
  auto check = [&](const std::vector<int>& subset) {
    const int d = static_cast<int>(subset.size());
    std::vector<std::pair<Label, Label>> pairs;
    for (Label f = 0; f < K; ++f)
      for (Label g = 0; g < K; ++g)
        if (f != g) pairs.emplace_back(f, g);
    std::vector<int> choice(d, 0);
    const int np = static_cast<int>(pairs.size());
    while (true) {
      std::set<std::uint32_t> seen;
      for (const auto& row : H.table) {
        std::uint32_t pat = 0;
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
          const Label y = row[subset[i]];
          const auto [f, g] = pairs[choice[i]];
          if (y == f)
            pat |= 1u << i;
          else if (y != g)
            ok = false;
        }
        if (ok) seen.insert(pat);
      }
      if (static_cast<int>(seen.size()) == (1 << d)) return true;
      int pos = d - 1;
      while (pos >= 0 && choice[pos] == np - 1) choice[pos--] = 0;
      if (pos < 0) return false;
      ++choice[pos];
    }
  };
  return largest_shattered(H.domain_size(), H.domain_size(), check);
}

bool ThresholdInterval::contains(const Rat& a) const {
  if (star_violated) return false;
  if (lo && a < *lo) return false;
  if (hi && !(a < *hi)) return false;
  return true;
}

VersionSpace VersionSpace::thresholds() {
  VersionSpace v;
  v.interval_ = ThresholdInterval::all();
  return v;
}

VersionSpace VersionSpace::threshold_interval(ThresholdInterval iv) {
  VersionSpace v;
  v.interval_ = std::move(iv);
  return v;
}

VersionSpace VersionSpace::finite_subset(
    std::shared_ptr<const FiniteTable> table) {
  VersionSpace v;
  v.table_ = std::move(table);
  const int n = v.table_->size();
  v.bits_.assign((n + 63) / 64, 0);
  for (int i = 0; i < n; ++i) v.bits_[i / 64] |= 1ULL << (i % 64);
  return v;
}

const ThresholdInterval& VersionSpace::interval() const {
  if (table_) throw DomainMismatchError("version space is not an interval");
  return interval_;
}

const FiniteTable& VersionSpace::table() const {
  if (!table_) throw DomainMismatchError("version space is not a finite subset");
  return *table_;
}

bool VersionSpace::empty() const {
  if (!table_) return interval_.empty();
  for (std::uint64_t w : bits_)
    if (w) return false;
  return true;
}

int VersionSpace::count() const {
  if (!table_)
    throw CapabilityError("count over a parameter interval is not finite");
  int n = 0;
  for (std::uint64_t w : bits_) n += std::popcount(w);
  return n;
}

bool VersionSpace::row_alive(int row) const {
  return (bits_[row / 64] >> (row % 64)) & 1;
}

bool VersionSpace::exists(const Example& x, Label y) const {
  if (!table_) {
    if (interval_.empty()) return false;
    if (x.is_atom())
      throw DomainMismatchError("atom example against threshold class");
    if (x.is_star()) return y == 0;
    if (y == 1) {
      // Some a in [lo,hi) with a >= x.
      return !interval_.hi || x.value < *interval_.hi;
    }
    // Some a in [lo,hi) with a < x.
    return !interval_.lo || *interval_.lo < x.value;
  }
  const int col = table_->domain_index(x);
  for (int r = 0; r < table_->size(); ++r)
    if (row_alive(r) && table_->table[r][col] == y) return true;
  return false;
}

VersionSpace VersionSpace::restrict(const Example& x, Label y) const {
  VersionSpace out = *this;
  if (!table_) {
    if (x.is_atom())
      throw DomainMismatchError("atom example against threshold class");
    if (x.is_star()) {
      if (y != 0) out.interval_.star_violated = true;
      return out;
    }
    if (y == 1) {
      // a >= x: raise the closed lower end.
      if (!out.interval_.lo || *out.interval_.lo < x.value)
        out.interval_.lo = x.value;
    } else {
      // a < x: lower the open upper end.
      if (!out.interval_.hi || x.value < *out.interval_.hi)
        out.interval_.hi = x.value;
    }
    return out;
  }
  const int col = table_->domain_index(x);
  for (int r = 0; r < table_->size(); ++r)
    if (out.row_alive(r) && table_->table[r][col] != y)
      out.bits_[r / 64] &= ~(1ULL << (r % 64));
  return out;
}

bool threshold_shatter_check(const VersionSpace& V, std::span<const Rat> xs) {
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    if (!(xs[i] < xs[i + 1]))
      throw StructuralError("threshold_shatter_check: xs not strictly increasing");
  if (V.empty()) return false;
  if (xs.empty()) return true;
  if (V.is_threshold()) {
    const ThresholdInterval& iv = V.interval();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      // Need a parameter in [xs[i], xs[i+1]) (last gap unbounded above).
      const Rat& glo = xs[i];
      const bool below_hi = !iv.hi || glo < *iv.hi;
      bool above_lo;
      if (!iv.lo)
        above_lo = true;
      else if (i + 1 < xs.size())
        above_lo = *iv.lo < xs[i + 1];
      else
        above_lo = true;
      if (!(below_hi && above_lo)) return false;
    }
    return true;
  }
  const FiniteTable& t = V.table();
  std::vector<int> cols;
  cols.reserve(xs.size());
  for (const Rat& p : xs) cols.push_back(t.domain_index(Example::point(p)));
  for (std::size_t i = 1; i <= xs.size(); ++i) {
    bool found = false;
    for (int r = 0; r < t.size() && !found; ++r) {
      if (!V.row_alive(r)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < xs.size() && ok; ++j) {
        const Label want = j + 1 <= i ? 1 : 0;
        if (t.table[r][cols[j]] != want) ok = false;
      }
      found = ok;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace prescient
