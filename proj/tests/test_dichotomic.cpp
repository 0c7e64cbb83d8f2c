#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "bienum/dichotomic.hpp"
#include "bienum/explicit_set.hpp"

#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace bienum;

namespace {

Point pt(long long a, long long b) { return Point(Rational(a), Rational(b)); }

std::vector<Point> pts(std::initializer_list<std::pair<long long, long long>>
                           coords) {
  std::vector<Point> out;
  for (const auto& [a, b] : coords) {
    out.push_back(pt(a, b));
  }
  return out;
}

std::vector<Point> emitted_points(const EnumerationLog& log) {
  std::vector<Point> out;
  for (const auto& ev : log.events) {
    out.push_back(ev.point);
  }
  return out;
}

void check_log_wellformed(const EnumerationLog& log) {
  OracleCallCounts prev;
  for (std::size_t i = 0; i < log.events.size(); ++i) {
    CHECK(log.events[i].index == i + 1);
    CHECK(log.events[i].calls.ws >= prev.ws);
    CHECK(log.events[i].calls.lex >= prev.lex);
    CHECK(log.events[i].calls.eps >= prev.eps);
    prev = log.events[i].calls;
  }
  CHECK(log.total_calls.ws >= prev.ws);
  CHECK(log.total_calls.lex >= prev.lex);
  CHECK(log.total_calls.eps >= prev.eps);
}

}  // namespace

TEST_CASE("gap_weight equalizes the two endpoints", "[dichotomic]") {
  CHECK(gap_weight(pt(1, 5), pt(4, 2)) == Weight{3, 3});
  CHECK(gap_weight(pt(0, 4), pt(1, 2)) == Weight{2, 1});
  CHECK(gap_weight(pt(0, 4), pt(4, 0)) == Weight{4, 4});
  CHECK_THROWS_AS(gap_weight(pt(1, 1), pt(1, 1)), UsageError);

  testing::Rng rng(777);
  for (int i = 0; i < 200; ++i) {
    const auto sample = testing::random_points(rng, 2, 0, 40);
    const Point& a = sample[0];
    const Point& b = sample[1];
    if (a == b || dominates(a, b) || dominates(b, a)) {
      continue;  // equalization is promised for incomparable pairs only
    }
    const Weight w = gap_weight(a, b);
    CHECK(weighted_value(w, a) == weighted_value(w, b));
  }
}

TEST_CASE("plain dichotomy recovers the extreme set", "[dichotomic][plain]") {
  ExplicitSetOracle oracle(
      pts({{0, 4}, {1, 2}, {2, 1}, {4, 0}, {3, 3}}));
  const auto result = dichotomic_plain(oracle);
  CHECK(result.front.points() == pts({{0, 4}, {1, 2}, {2, 1}, {4, 0}}));
  check_log_wellformed(result.log);
}

TEST_CASE("plain dichotomy drops collinear interior points",
          "[dichotomic][plain]") {
  ExplicitSetOracle oracle(pts({{0, 2}, {1, 1}, {2, 0}}));
  CHECK(dichotomic_plain(oracle).front.points() == pts({{0, 2}, {2, 0}}));
}

TEST_CASE("plain dichotomy on a singleton stops after the seeds",
          "[dichotomic][plain]") {
  ExplicitSetOracle oracle(pts({{5, 5}}));
  const auto result = dichotomic_plain(oracle);
  CHECK(result.front.points() == pts({{5, 5}}));
  CHECK(result.log.total_calls.ws == 2);
  CHECK(result.log.total_calls.lex == 0);
}

TEST_CASE("plain dichotomy survives dominated weighted-sum seeds",
          "[dichotomic][plain]") {
  // (0,9) is returned for weight (1,0) by index order but is dominated.
  ExplicitSetOracle oracle(pts({{0, 9}, {0, 1}, {5, 0}}));
  CHECK(dichotomic_plain(oracle).front.points() == pts({{0, 1}, {5, 0}}));
}

TEST_CASE("empty image is an error for the dichotomies", "[dichotomic]") {
  ExplicitSetOracle empty({});
  CHECK_THROWS_AS(dichotomic_plain(empty), InfeasibleError);
  CHECK_THROWS_AS(dichotomic_lex(empty), InfeasibleError);
  CHECK_THROWS_AS(dichotomic_poly_delay(empty), InfeasibleError);
}

TEST_CASE("lex dichotomy emits on discovery with 2k-1 calls",
          "[dichotomic][lex]") {
  ExplicitSetOracle oracle(
      pts({{0, 4}, {1, 2}, {2, 1}, {4, 0}, {3, 3}}));
  std::vector<Point> streamed;
  const auto result = dichotomic_lex(
      oracle, [&](const EmitEvent& ev) { streamed.push_back(ev.point); });
  CHECK(result.front.points() == pts({{0, 4}, {1, 2}, {2, 1}, {4, 0}}));
  // Seeds first (lex-least, then lex-greatest corner), then FIFO discovery.
  CHECK(streamed == pts({{0, 4}, {4, 0}, {1, 2}, {2, 1}}));
  CHECK(result.log.total_calls.lex == 7);
  CHECK(result.log.total_calls.ws == 0);
  check_log_wellformed(result.log);
}

TEST_CASE("lex dichotomy singleton uses both seed calls", "[dichotomic][lex]") {
  ExplicitSetOracle oracle(pts({{5, 5}}));
  const auto result = dichotomic_lex(oracle);
  CHECK(result.front.points() == pts({{5, 5}}));
  CHECK(result.log.events.size() == 1);
  CHECK(result.log.total_calls.lex == 2);
}

TEST_CASE("lex dichotomy two-point image needs three calls",
          "[dichotomic][lex]") {
  ExplicitSetOracle oracle(pts({{0, 1}, {1, 0}}));
  const auto result = dichotomic_lex(oracle);
  CHECK(result.front.size() == 2);
  CHECK(result.log.total_calls.lex == 3);
}

TEST_CASE("poly-delay variant matches lex output with bounded gaps",
          "[dichotomic][polydelay]") {
  ExplicitSetOracle oracle(
      pts({{0, 4}, {1, 2}, {2, 1}, {4, 0}, {3, 3}}));
  std::vector<Point> streamed;
  const auto result = dichotomic_poly_delay(
      oracle, [&](const EmitEvent& ev) { streamed.push_back(ev.point); });
  CHECK(result.front.points() == pts({{0, 4}, {1, 2}, {2, 1}, {4, 0}}));
  CHECK(streamed == pts({{0, 4}, {4, 0}, {1, 2}, {2, 1}}));
  CHECK(result.log.total_calls.lex == 7);
  CHECK(result.log.loop_iterations == result.log.events.size());
  CHECK(result.log.max_interemission_lex() <= 2);
  check_log_wellformed(result.log);
}

TEST_CASE("poly-delay collinear image emits endpoints only",
          "[dichotomic][polydelay]") {
  ExplicitSetOracle oracle(pts({{0, 2}, {1, 1}, {2, 0}}));
  const auto result = dichotomic_poly_delay(oracle);
  CHECK(result.front.points() == pts({{0, 2}, {2, 0}}));
  CHECK(result.log.max_interemission_lex() <= 2);
}

TEST_CASE("poly-delay singleton emits once in one iteration",
          "[dichotomic][polydelay]") {
  ExplicitSetOracle oracle(pts({{5, 5}}));
  const auto result = dichotomic_poly_delay(oracle);
  CHECK(result.front.points() == pts({{5, 5}}));
  CHECK(result.log.loop_iterations == 1);
  CHECK(result.log.events.size() == 1);
  CHECK(result.log.total_calls.lex == 2);
}

TEST_CASE("all three variants agree with the reference on random images",
          "[dichotomic][property]") {
  testing::Rng rng(13572468);
  for (int round = 0; round < 60; ++round) {
    const auto sample =
        testing::random_points(rng, 1 + testing::rnd_below(rng, 120), 0, 50);
    const auto expected = testing::reference_extremes(sample);
    CAPTURE(round, sample.size());

    ExplicitSetOracle plain_oracle(sample);
    ExplicitSetOracle lex_oracle(sample);
    ExplicitSetOracle poly_oracle(sample);

    const auto plain = dichotomic_plain(plain_oracle);
    const auto lex = dichotomic_lex(lex_oracle);
    const auto poly = dichotomic_poly_delay(poly_oracle);

    CHECK(plain.front.points() == expected);
    CHECK(lex.front.points() == expected);
    CHECK(poly.front.points() == expected);

    const auto k = expected.size();
    CHECK(plain.log.total_calls.ws <= 4 * k);
    if (k >= 2) {
      CHECK(lex.log.total_calls.lex == 2 * k - 1);
      CHECK(poly.log.total_calls.lex == 2 * k - 1);
    } else {
      CHECK(lex.log.total_calls.lex == 2);
      CHECK(poly.log.total_calls.lex == 2);
    }
    CHECK(poly.log.max_interemission_lex() <= 2);
    CHECK(poly.log.loop_iterations == poly.log.events.size());
    CHECK(emitted_points(poly.log) == emitted_points(lex.log));
    check_log_wellformed(plain.log);
    check_log_wellformed(lex.log);
    check_log_wellformed(poly.log);
  }
}

TEST_CASE("positive objective scaling rescales the output in place",
          "[dichotomic][property]") {
  testing::Rng rng(24681357);
  const Rational s1 = make_rational(3, 2);
  const Rational s2 = Rational(4);
  for (int round = 0; round < 20; ++round) {
    const auto sample =
        testing::random_points(rng, 1 + testing::rnd_below(rng, 50), 0, 30);
    std::vector<Point> scaled;
    for (const Point& p : sample) {
      scaled.emplace_back(p[0] * s1, p[1] * s2);
    }
    ExplicitSetOracle base(sample);
    ExplicitSetOracle stretched(scaled);
    const auto base_front = dichotomic_lex(base).front.points();
    const auto stretched_front = dichotomic_lex(stretched).front.points();
    REQUIRE(base_front.size() == stretched_front.size());
    for (std::size_t i = 0; i < base_front.size(); ++i) {
      CHECK(stretched_front[i] ==
            Point(base_front[i][0] * s1, base_front[i][1] * s2));
    }
  }
}

TEST_CASE("adjacent lex emissions have certified empty gaps",
          "[dichotomic][property]") {
  testing::Rng rng(86421357);
  for (int round = 0; round < 30; ++round) {
    const auto sample =
        testing::random_points(rng, 1 + testing::rnd_below(rng, 60), 0, 40);
    ExplicitSetOracle oracle(sample);
    const auto front = dichotomic_lex(oracle).front.points();
    const auto extremes = testing::reference_extremes(sample);
    // No extreme point may fall lexicographically between adjacent output.
    for (std::size_t i = 1; i < front.size(); ++i) {
      for (const Point& z : extremes) {
        const bool inside = lex_less(front[i - 1], z) && lex_less(z, front[i]);
        CHECK_FALSE(inside);
      }
    }
  }
}
