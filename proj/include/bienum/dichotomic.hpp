#pragma once

#include <deque>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bienum/bifront.hpp"
#include "bienum/enumeration_log.hpp"
#include "bienum/errors.hpp"
#include "bienum/oracle.hpp"
#include "bienum/point.hpp"

namespace bienum {

/// Probe weight λ = (|a₂ − b₂|, |a₁ − b₁|) for the gap between two distinct
/// points.  For incomparable (mutually nondominated) pairs — the only pairs
/// the enumerators probe — λᵀa = λᵀb, so λ is the normal of the joining
/// segment and minimizing λᵀy searches below it.
inline Weight gap_weight(const Point& a, const Point& b) {
  if (a.dimension() != 2 || b.dimension() != 2) {
    throw UsageError("gap_weight expects biobjective points");
  }
  if (a == b) {
    throw UsageError("gap_weight requires two distinct points");
  }
  using boost::multiprecision::abs;
  return Weight{abs(a[1] - b[1]), abs(a[0] - b[0])};
}

namespace detail {

inline const OracleAnswer& require_optimal(const OracleAnswer& ans) {
  switch (ans.status) {
    case OracleStatus::Optimal:
      return ans;
    case OracleStatus::Infeasible:
      throw InfeasibleError("scalarization oracle reports an empty image");
    case OracleStatus::Unbounded:
      throw UnboundedError("scalarization oracle reports an unbounded image");
  }
  throw InternalError("unknown oracle status");
}

struct PointPairLess {
  bool operator()(const std::pair<Point, Point>& a,
                  const std::pair<Point, Point>& b) const {
    if (a.first != b.first) {
      return lex_less(a.first, b.first);
    }
    return lex_less(a.second, b.second);
  }
};

inline std::pair<Point, Point> lex_ordered(const Point& a, const Point& b) {
  return lex_less(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace detail

/// Weighted-sum-only dichotomy.  Seeds with the two single-objective
/// optima, then repeatedly probes the segment between a recorded pair; a
/// probe answer with strictly smaller weighted value is recorded and splits
/// the pair.  Because a plain weighted-sum oracle may return optima that
/// are not extreme (or even dominated seeds), recorded points are reduced
/// to the extreme set by a final hull pass, and emission happens only then.
///
/// Throws InfeasibleError when the oracle has an empty image.
inline EnumerationResult dichotomic_plain(ScalarizationOracle& oracle,
                                          const EmitFn& on_emit = {},
                                          bool record_time = false) {
  detail::RunRecorder rec(oracle.calls(), on_emit, record_time);
  EnumerationLog log;

  const Point y0 =
      detail::require_optimal(oracle.weighted_sum({Rational(1), Rational(0)}))
          .point;
  const Point y1 =
      detail::require_optimal(oracle.weighted_sum({Rational(0), Rational(1)}))
          .point;

  std::set<Point, LexLess> recorded{y0, y1};
  if (y0 != y1) {
    std::deque<std::pair<Point, Point>> queue;
    std::set<std::pair<Point, Point>, detail::PointPairLess> explored;
    const auto enqueue = [&](const Point& a, const Point& b) {
      auto pair = detail::lex_ordered(a, b);
      if (explored.insert(pair).second) {
        queue.push_back(std::move(pair));
      }
    };
    enqueue(y0, y1);
    while (!queue.empty()) {
      ++log.loop_iterations;
      const auto [left, right] = queue.front();
      queue.pop_front();
      const Weight lambda = gap_weight(left, right);
      const Point probe =
          detail::require_optimal(oracle.weighted_sum(lambda)).point;
      if (weighted_value(lambda, probe) == weighted_value(lambda, left)) {
        continue;  // nothing below the segment: the gap is certified
      }
      recorded.insert(probe);
      enqueue(left, probe);
      enqueue(probe, right);
    }
  }

  BiFront front = hull_extremes_2d(
      std::vector<Point>(recorded.begin(), recorded.end()));
  for (const Point& p : front.points()) {
    rec.emit(log, p);
  }
  rec.finish(log);
  return EnumerationResult{std::move(front), std::move(log)};
}

namespace detail {

/// Probes the gap between two already-emitted extreme points with the lex
/// oracle.  Returns the newly discovered extreme point strictly between
/// them, or nothing when the gap is certified empty (the oracle answers
/// with the left endpoint, the lex-least point of the segment's face).
inline std::optional<Point> probe_gap(ScalarizationOracle& oracle,
                                      const Point& left, const Point& right) {
  const Weight lambda = gap_weight(left, right);
  const Point probe =
      require_optimal(oracle.lex_weighted_sum(lambda)).point;
  if (probe == left) {
    return std::nullopt;
  }
  if (!lex_less(left, probe) || !lex_less(probe, right)) {
    throw InternalError("lex oracle answer escaped the probed gap");
  }
  return probe;
}

}  // namespace detail

/// Dichotomy over a lexicographic weighted-sum oracle.  Every answer is an
/// extreme point, so each point is emitted the moment it is discovered and
/// no post-filter is needed.  Total lex calls are exactly 2k−1 for k ≥ 2
/// emitted points (k−2 discoveries plus k−1 gap certificates plus the two
/// seed calls) and exactly 2 for a singleton image.
inline EnumerationResult dichotomic_lex(ScalarizationOracle& oracle,
                                        const EmitFn& on_emit = {},
                                        bool record_time = false) {
  detail::RunRecorder rec(oracle.calls(), on_emit, record_time);
  EnumerationLog log;
  BiFront front;

  const Point y0 = detail::require_optimal(
                       oracle.lex_weighted_sum({Rational(1), Rational(0)}))
                       .point;
  front.insert(y0);
  rec.emit(log, y0);

  const Point y1 = detail::require_optimal(
                       oracle.lex_weighted_sum({Rational(0), Rational(1)}))
                       .point;
  if (y1 != y0) {
    front.insert(y1);
    rec.emit(log, y1);
    std::deque<std::pair<Point, Point>> queue;
    queue.emplace_back(y0, y1);  // y0 is the lex-least image point
    while (!queue.empty()) {
      ++log.loop_iterations;
      const auto [left, right] = queue.front();
      queue.pop_front();
      if (auto found = detail::probe_gap(oracle, left, right)) {
        front.insert(*found);
        rec.emit(log, *found);
        queue.emplace_back(left, *found);
        queue.emplace_back(*found, right);
      }
    }
  }
  rec.finish(log);
  return EnumerationResult{std::move(front), std::move(log)};
}

/// Polynomial-delay variant of the lex dichotomy.  Discovered points are
/// withheld in a FIFO of (midpoint, left, right) triples and announced one
/// per main-loop iteration; the two sub-gap probes of a midpoint run in the
/// same iteration as its announcement.  This caps the lex calls between
/// consecutive emissions (and before the first) at 2 while emitting the
/// same point set as dichotomic_lex.
inline EnumerationResult dichotomic_poly_delay(ScalarizationOracle& oracle,
                                               const EmitFn& on_emit = {},
                                               bool record_time = false) {
  detail::RunRecorder rec(oracle.calls(), on_emit, record_time);
  EnumerationLog log;
  BiFront front;

  struct Triple {
    Point mid, left, right;
  };

  const Point y0 = detail::require_optimal(
                       oracle.lex_weighted_sum({Rational(1), Rational(0)}))
                       .point;
  const Point y1 = detail::require_optimal(
                       oracle.lex_weighted_sum({Rational(0), Rational(1)}))
                       .point;

  ++log.loop_iterations;
  front.insert(y0);
  rec.emit(log, y0);

  if (y1 != y0) {
    std::deque<Triple> pending;
    const auto probe_into = [&](const Point& left, const Point& right) {
      if (auto found = detail::probe_gap(oracle, left, right)) {
        pending.push_back(Triple{std::move(*found), left, right});
      }
    };

    ++log.loop_iterations;
    front.insert(y1);
    rec.emit(log, y1);
    probe_into(y0, y1);

    while (!pending.empty()) {
      ++log.loop_iterations;
      const Triple triple = pending.front();
      pending.pop_front();
      front.insert(triple.mid);
      rec.emit(log, triple.mid);
      probe_into(triple.left, triple.mid);
      probe_into(triple.mid, triple.right);
    }
  }
  rec.finish(log);
  return EnumerationResult{std::move(front), std::move(log)};
}

}  // namespace bienum
