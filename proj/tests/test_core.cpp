#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "prescient/core.hpp"
#include "prescient/rng.hpp"

using namespace prescient;

namespace {

Transcript make_transcript(const std::vector<std::vector<double>>& dists,
                           const std::vector<Label>& ys) {
  Transcript tr;
  for (std::size_t i = 0; i < dists.size(); ++i) {
    RoundRecord r;
    r.t = static_cast<int>(i) + 1;
    r.x = Example::atom(static_cast<std::uint32_t>(i));
    r.y = ys[i];
    r.prediction = dists[i];
    tr.rounds.push_back(r);
  }
  return tr;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
  const Rat half(1, 2);
  const Rat quarter(1, 4);
  CHECK(half + quarter == Rat(3, 4));
  CHECK(half * half == quarter);
  CHECK(Rat(2, 4) == half);
  CHECK(Rat(-1, -2) == half);
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("5") == Rat(5));
  CHECK(Rat(3, 4).str() == "3/4");
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rat(1, 3) / Rat(0), std::domain_error);
}

TEST_CASE("rational overflow is detected, not wrapped") {
  const Rat big(1, 1000000007LL);
  Rat acc = big;
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 10; ++i) acc *= big;
      }(),
      std::overflow_error);
}

TEST_CASE("example equality and point range invariant") {
  CHECK(Example::point(Rat(1, 2)) == Example::point(Rat(2, 4)));
  CHECK(Example::star() == Example::star());
  CHECK(Example::atom(3) != Example::atom(4));
  CHECK(Example::point(Rat(1, 2)) != Example::star());
  CHECK_THROWS_AS(Example::point(Rat(3, 2)), StructuralError);
  CHECK_THROWS_AS(Example::point(Rat(-1, 2)), StructuralError);
  CHECK(Example::point(Rat(1, 4)) < Example::point(Rat(1, 2)));
}

TEST_CASE("expected mistakes: point masses on the truth give zero") {
  const Transcript tr = make_transcript(
      {{0.0, 1.0}, {1.0, 0.0}, {0.0, 1.0}}, {1, 0, 1});
  CHECK(expected_mistakes(tr) == 0.0);
}

TEST_CASE("expected mistakes: uniform binary prediction at T=10 gives 5") {
  std::vector<std::vector<double>> dists(10, {0.5, 0.5});
  std::vector<Label> ys(10, 1);
  CHECK(expected_mistakes(make_transcript(dists, ys)) == doctest::Approx(5.0));
}

TEST_CASE("expected mistakes: hand sum of complements") {
  // Probabilities on the correct label: 1, 0.25, 0.5.
  const Transcript tr = make_transcript(
      {{0.0, 1.0}, {0.75, 0.25}, {0.5, 0.5}}, {1, 1, 1});
  CHECK(expected_mistakes(tr) == doctest::Approx(1.25));
}

TEST_CASE("regret is the subtraction of best loss") {
  std::vector<std::vector<double>> dists(10, {0.3, 0.7});
  std::vector<Label> ys(10, 0);  // expected mistakes = 7
  const Transcript tr = make_transcript(dists, ys);
  CHECK(regret(tr, 3) == doctest::Approx(4.0));
  CHECK(regret(tr, 0) == doctest::Approx(expected_mistakes(tr)));
}

TEST_CASE("predictor mistake count never counts round 1 and caps at T-1") {
  Transcript tr = make_transcript(
      {{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}}, {0, 0, 0, 0});
  CHECK(predictor_mistake_count(tr) == 0);
  for (std::size_t i = 1; i < tr.rounds.size(); ++i)
    tr.rounds[i].predictor_mistake = true;
  CHECK(predictor_mistake_count(tr) == 3);
  tr.rounds[0].predictor_mistake = true;
  CHECK_THROWS_AS(expected_mistakes(tr), StructuralError);
}

TEST_CASE("malformed transcripts are structural errors") {
  Transcript bad = make_transcript({{0.5, 0.6}}, {0});
  CHECK_THROWS_AS(expected_mistakes(bad), StructuralError);
  Transcript out_of_order = make_transcript({{1.0, 0.0}, {1.0, 0.0}}, {0, 0});
  out_of_order.rounds[1].t = 5;
  CHECK_THROWS_AS(expected_mistakes(out_of_order), StructuralError);
}

TEST_CASE("expected mistakes is additive over concatenation") {
  Rng rng(99);
  for (int rep = 0; rep < 50; ++rep) {
    const int n1 = 1 + static_cast<int>(rng.below(6));
    const int n2 = 1 + static_cast<int>(rng.below(6));
    std::vector<std::vector<double>> d1, d2;
    std::vector<Label> y1, y2;
    const auto random_round = [&](std::vector<std::vector<double>>& d,
                                  std::vector<Label>& y) {
      const double p = rng.unit();
      d.push_back({p, 1.0 - p});
      y.push_back(static_cast<Label>(rng.below(2)));
    };
    for (int i = 0; i < n1; ++i) random_round(d1, y1);
    for (int i = 0; i < n2; ++i) random_round(d2, y2);
    std::vector<std::vector<double>> dc = d1;
    dc.insert(dc.end(), d2.begin(), d2.end());
    std::vector<Label> yc = y1;
    yc.insert(yc.end(), y2.begin(), y2.end());
    CHECK(expected_mistakes(make_transcript(dc, yc)) ==
          doctest::Approx(expected_mistakes(make_transcript(d1, y1)) +
                          expected_mistakes(make_transcript(d2, y2))));
  }
}

TEST_CASE("sequence digests separate different sequences") {
  const std::vector<Example> a = {Example::point(Rat(1, 2)), Example::star()};
  const std::vector<Example> b = {Example::point(Rat(1, 3)), Example::star()};
  CHECK(digest_sequence(a) == digest_sequence(a));
  CHECK(digest_sequence(a) != digest_sequence(b));
}
