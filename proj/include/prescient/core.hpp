#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "prescient/rational.hpp"

namespace prescient {

// Error taxonomy shared by all modules.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RealizabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Label = int;

// A point of the instance space: an exact rational in [0,1], the reserved
// element "star", or an abstract atom id.
struct Example {
  enum class Kind : std::uint8_t { Point, Star, Atom };

  Kind kind = Kind::Star;
  Rat value{};                // Point only
  std::uint32_t atom_id = 0;  // Atom only

  static Example point(Rat v) {
    if (v < Rat(0) || v > Rat(1))
      throw StructuralError("Example: point outside [0,1]: " + v.str());
    Example e;
    e.kind = Kind::Point;
    e.value = v;
    return e;
  }
  static Example star() { return Example{}; }
  static Example atom(std::uint32_t id) {
    Example e;
    e.kind = Kind::Atom;
    e.atom_id = id;
    return e;
  }

  bool is_point() const { return kind == Kind::Point; }
  bool is_star() const { return kind == Kind::Star; }
  bool is_atom() const { return kind == Kind::Atom; }

  friend bool operator==(const Example& a, const Example& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Point: return a.value == b.value;
      case Kind::Star: return true;
      case Kind::Atom: return a.atom_id == b.atom_id;
    }
    return false;
  }
  friend bool operator!=(const Example& a, const Example& b) {
    return !(a == b);
  }
  // Total order: points by value, then star, then atoms by id. Used for
  // sorting observed blocks; only the point-vs-point case is meaningful.
  friend bool operator<(const Example& a, const Example& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.kind == Kind::Point) return a.value < b.value;
    if (a.kind == Kind::Atom) return a.atom_id < b.atom_id;
    return false;
  }

  std::string str() const;
};

struct LabeledStream {
  std::vector<Example> xs;
  std::vector<Label> ys;

  int horizon() const { return static_cast<int>(xs.size()); }
  void validate() const {
    if (xs.empty() || xs.size() != ys.size())
      throw StructuralError("LabeledStream: length mismatch or empty");
  }
};

struct RoundRecord {
  int t = 0;  // 1-based
  Example x;
  Label y = 0;
  std::vector<double> prediction;  // distribution over labels 0..K-1
  std::uint64_t predictor_output_digest = 0;
  bool predictor_mistake = false;  // always false at t = 1
};

struct Transcript {
  std::vector<RoundRecord> rounds;
  std::uint64_t config_digest = 0;
  std::uint64_t seed = 0;
  // Populated only when the run was configured to retain full predicted
  // sequences; otherwise rounds carry digests alone.
  std::vector<std::vector<Example>> retained_predictions;

  int horizon() const { return static_cast<int>(rounds.size()); }
};

// Throws StructuralError when the transcript is malformed (bad round
// indices, prediction not a distribution, mistake flag at t = 1).
void validate_transcript(const Transcript& tr);

// Sum over rounds of (1 - prediction_t[y_t]): the analytic expectation of
// the 0-1 loss under the recorded distributions.
double expected_mistakes(const Transcript& tr);

// expected_mistakes minus the caller-supplied best fixed-hypothesis loss.
double regret(const Transcript& tr, long best_loss);

// Count of rounds t >= 2 whose predictor_mistake flag is set.
int predictor_mistake_count(const Transcript& tr);

// FNV-1a over the serialized sequence; stable across runs.
std::uint64_t digest_sequence(std::span<const Example> xs);
std::uint64_t digest_bytes(std::span<const char> bytes);

}  // namespace prescient
