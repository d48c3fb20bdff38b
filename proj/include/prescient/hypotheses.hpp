#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "prescient/core.hpp"

namespace prescient {

// Deduplicated behavior table: one row per hypothesis, one column per domain
// example. When the table was produced by projecting the threshold family,
// `reps` holds one canonical parameter per row, so each row is also a genuine
// hypothesis on the whole example space.
struct FiniteTable {
  std::vector<Example> domain;
  std::vector<std::vector<Label>> table;
  int label_count = 2;
  std::vector<Rat> reps;  // empty unless threshold-derived

  int size() const { return static_cast<int>(table.size()); }
  int domain_size() const { return static_cast<int>(domain.size()); }

  // Index of x in the domain; DomainMismatchError when absent.
  int domain_index(const Example& x) const;
  Label evaluate(int row, const Example& x) const;

  std::string to_json() const;
  static FiniteTable from_json(const std::string& text);
};

// h_a(x) = 1{x <= a} * 1{x != star}, parameter a ranging over the rationals.
Label evaluate_threshold(const Rat& a, const Example& x);

// Either the parametric threshold family or an explicit finite table.
class HypothesisClass {
 public:
  static HypothesisClass thresholds() { return HypothesisClass(nullptr); }
  static HypothesisClass finite(FiniteTable t) {
    return HypothesisClass(std::make_shared<const FiniteTable>(std::move(t)));
  }

  bool is_threshold() const { return table_ == nullptr; }
  const FiniteTable& finite_table() const {
    if (!table_) throw DomainMismatchError("class is not a finite table");
    return *table_;
  }
  std::shared_ptr<const FiniteTable> finite_table_ptr() const { return table_; }

  int label_count() const { return table_ ? table_->label_count : 2; }

 private:
  explicit HypothesisClass(std::shared_ptr<const FiniteTable> t)
      : table_(std::move(t)) {}
  std::shared_ptr<const FiniteTable> table_;
};

// Behavior table of H restricted to xs, rows deduplicated, columns in stream
// order. Thresholds get one canonical representative per behavior gap
// (midpoints of consecutive distinct sorted points, ends extended by 1).
// Every example must be evaluable by H (atoms against thresholds, or
// examples outside a finite table's domain, are DomainMismatchError).
FiniteTable project(const HypothesisClass& H, std::span<const Example> xs);

// Brute-force combinatorial dimensions. Guards are hard CapabilityErrors,
// never silent truncation: the results feed bound formulas.
int vc_dimension(const FiniteTable& H);            // |domain| <= 20
int littlestone_dimension(const FiniteTable& H);   // |H| <= 64, |domain| <= 16
int natarajan_dimension(const FiniteTable& H);     // |domain| <= 12

// Memoized Littlestone-dimension recursion over row subsets of a fixed
// table, for reuse inside learners. Subject to the same guards.
class LdimOracle {
 public:
  explicit LdimOracle(std::shared_ptr<const FiniteTable> table);
  int ldim(std::uint64_t row_mask);
  std::uint64_t full_mask() const { return full_mask_; }
  std::uint64_t restrict_mask(std::uint64_t mask, int col, Label y) const;
  const FiniteTable& table() const { return *table_; }

 private:
  std::shared_ptr<const FiniteTable> table_;
  std::uint64_t full_mask_ = 0;
  std::unordered_map<std::uint64_t, int> memo_;
};

// Set of threshold parameters surviving a run of consistent restrictions.
// Constraints from labeled points are always of the form a >= p or a < p, so
// the surviving set is exactly [lo, hi) with optional infinite ends. A
// (star, 1) pair is unsatisfiable and flips the violation flag instead.
struct ThresholdInterval {
  std::optional<Rat> lo;  // nullopt = -inf; closed end
  std::optional<Rat> hi;  // nullopt = +inf; open end
  bool star_violated = false;

  static ThresholdInterval all() { return {}; }
  bool empty() const {
    if (star_violated) return true;
    return lo.has_value() && hi.has_value() && !(*lo < *hi);
  }
  bool contains(const Rat& a) const;
};

class VersionSpace {
 public:
  // Full threshold family.
  static VersionSpace thresholds();
  static VersionSpace threshold_interval(ThresholdInterval iv);
  // All rows of the given table.
  static VersionSpace finite_subset(std::shared_ptr<const FiniteTable> table);

  bool is_threshold() const { return table_ == nullptr; }
  const ThresholdInterval& interval() const;
  const std::vector<std::uint64_t>& bits() const { return bits_; }
  const FiniteTable& table() const;

  bool empty() const;
  int count() const;  // surviving hypotheses; CapabilityError for intervals

  bool exists(const Example& x, Label y) const;
  VersionSpace restrict(const Example& x, Label y) const;
  bool row_alive(int row) const;

 private:
  VersionSpace() = default;
  ThresholdInterval interval_;
  std::shared_ptr<const FiniteTable> table_;
  std::vector<std::uint64_t> bits_;
};

// True iff for every i in [k] some surviving hypothesis labels the first i
// points 1 and the rest 0. xs must be strictly increasing points.
bool threshold_shatter_check(const VersionSpace& V, std::span<const Rat> xs);

}  // namespace prescient
