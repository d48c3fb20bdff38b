#include "prescient/core.hpp"

#include <cmath>

namespace prescient {

std::string Example::str() const {
  switch (kind) {
    case Kind::Point: return value.str();
    case Kind::Star: return "star";
    case Kind::Atom: return "atom:" + std::to_string(atom_id);
  }
  return "?";
}

void validate_transcript(const Transcript& tr) {
  for (std::size_t i = 0; i < tr.rounds.size(); ++i) {
    const RoundRecord& r = tr.rounds[i];
    if (r.t != static_cast<int>(i) + 1)
      throw StructuralError("transcript: round indices not 1..T in order");
    if (r.prediction.empty())
      throw StructuralError("transcript: empty prediction at t=" +
                            std::to_string(r.t));
    double sum = 0.0;
    for (double p : r.prediction) {
      if (p < -1e-12 || p > 1.0 + 1e-12)
        throw StructuralError("transcript: probability outside [0,1]");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw StructuralError("transcript: prediction does not sum to 1");
    if (r.y < 0 || r.y >= static_cast<int>(r.prediction.size()))
      throw StructuralError("transcript: label outside prediction support");
    if (r.t == 1 && r.predictor_mistake)
      throw StructuralError("transcript: predictor_mistake set at t=1");
  }
}

double expected_mistakes(const Transcript& tr) {
  validate_transcript(tr);
  double total = 0.0;
  for (const RoundRecord& r : tr.rounds) total += 1.0 - r.prediction[r.y];
  return total;
}

double regret(const Transcript& tr, long best_loss) {
  return expected_mistakes(tr) - static_cast<double>(best_loss);
}

int predictor_mistake_count(const Transcript& tr) {
  int count = 0;
  for (const RoundRecord& r : tr.rounds)
    if (r.t >= 2 && r.predictor_mistake) ++count;
  return count;
}

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
}

}  // namespace

std::uint64_t digest_sequence(std::span<const Example> xs) {
  std::uint64_t h = kFnvOffset;
  for (const Example& e : xs) {
    const auto k = static_cast<std::uint8_t>(e.kind);
    fnv_mix(h, &k, 1);
    if (e.is_point()) {
      const std::int64_t n = e.value.num(), d = e.value.den();
      fnv_mix(h, &n, sizeof n);
      fnv_mix(h, &d, sizeof d);
    } else if (e.is_atom()) {
      fnv_mix(h, &e.atom_id, sizeof e.atom_id);
    }
  }
  return h;
}

std::uint64_t digest_bytes(std::span<const char> bytes) {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, bytes.data(), bytes.size());
  return h;
}

}  // namespace prescient
