#include "prescient/rational.hpp"

#include <charconv>
#include <limits>

namespace prescient {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("Rat: bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

void Rat::assign128(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const i128 g = n == 0 ? d : gcd128(n, d);
  n /= g;
  d /= g;
  constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
  if (n < lo || n > hi || d > hi)
    throw std::overflow_error("Rat: value out of int64 range");
  num_ = static_cast<std::int64_t>(n);
  den_ = static_cast<std::int64_t>(d);
}

Rat Rat::parse(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string Rat::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace prescient
