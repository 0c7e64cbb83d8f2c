#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "bienum/enumeration_log.hpp"
#include "bienum/errors.hpp"
#include "bienum/lp/facet.hpp"
#include "bienum/lp/instance.hpp"
#include "bienum/lp/lex_solve.hpp"
#include "bienum/oracle.hpp"
#include "bienum/point.hpp"
#include "bienum/rational.hpp"

namespace bienum {

/// One movement of the facet walk: standing at `from`, the supporting facet
/// λᵀz = rhs was identified and its other endpoint `to` was computed.
struct WalkStep {
  Point from;
  Weight lambda{};
  Rational rhs;
  Point to;
};

struct WalkResult {
  BiFront front;
  EnumerationLog log;
  std::vector<WalkStep> steps;
  /// Peak number of image points held at once; the walk is memoryless up to
  /// the current point, the target point, and the next point, so this never
  /// exceeds 3 regardless of output size.
  std::size_t retained_high_water = 0;
};

namespace detail {

/// Lexicographic weighted-sum over the LP image: minimize λᵀ(C·x), then y₁,
/// then y₂.  Returns the image point of the lexicographic minimizer.
inline Point lp_lex_weighted_point(const LPInstance& lp, const Matrix& rows,
                                   const Vector& rhs, const Weight& weight) {
  const std::size_t n = lp.variable_count();
  Vector combined(n);
  for (std::size_t j = 0; j < n; ++j) {
    combined[j] =
        weight[0] * lp.objectives[0][j] + weight[1] * lp.objectives[1][j];
  }
  Matrix stages;
  stages.push_back(std::move(combined));
  stages.push_back(lp.objectives[0]);
  stages.push_back(lp.objectives[1]);
  const LexOutcome out = lex_lp_solve(rows, rhs, stages);
  if (out.status == SolveStatus::Infeasible) {
    throw InfeasibleError("constraint system is infeasible");
  }
  if (out.status == SolveStatus::Unbounded) {
    throw UnboundedError(
        "weighted-sum objective is unbounded: the instance has no ideal point");
  }
  return lp.image(*out.solution);
}

}  // namespace detail

/// Enumerates the nondominated extreme points of a biobjective LP by
/// walking the boundary of the upper image from the bottom-right extreme
/// point to the top-left one.  Each step identifies the supporting facet at
/// the current point via the dual support program (steepest weight), pins
/// the facet as an equality, and lexicographically minimizes along it to
/// reach the neighbouring vertex.  Emission order is strictly decreasing in
/// the first objective.  The `lex` counter tallies primal lexicographic
/// solves and the `ws` counter tallies dual facet solves.
inline WalkResult extreme_point_walk(const LPInstance& lp, EmitFn on_emit = {},
                                     bool record_time = false) {
  detail::require_biobjective(lp);
  WalkResult result;
  OracleCallCounts counts;
  detail::RunRecorder recorder(counts, std::move(on_emit), record_time);

  std::size_t retained = 0;
  const auto track = [&](std::size_t delta_up) {
    retained += delta_up;
    result.retained_high_water = std::max(result.retained_high_water, retained);
  };

  ++counts.lex;
  const Point finish = detail::lp_lex_weighted_point(
      lp, lp.constraints, lp.rhs, Weight{Rational(1), Rational(0)});
  track(1);
  ++counts.lex;
  Point current = detail::lp_lex_weighted_point(
      lp, lp.constraints, lp.rhs, Weight{Rational(0), Rational(1)});
  track(1);

  ++result.log.loop_iterations;
  result.front.insert(current);
  recorder.emit(result.log, current);

  while (current != finish) {
    ++counts.ws;
    const SupportingFacet facet = supporting_facet(lp, current);

    Matrix pinned_rows = lp.constraints;
    Vector pinned_rhs = lp.rhs;
    const std::size_t n = lp.variable_count();
    Vector facet_row(n);
    for (std::size_t j = 0; j < n; ++j) {
      facet_row[j] = facet.lambda[0] * lp.objectives[0][j] +
                     facet.lambda[1] * lp.objectives[1][j];
    }
    Vector negated(n);
    for (std::size_t j = 0; j < n; ++j) {
      negated[j] = -facet_row[j];
    }
    pinned_rows.push_back(std::move(facet_row));
    pinned_rhs.push_back(facet.rhs);
    pinned_rows.push_back(std::move(negated));
    pinned_rhs.push_back(-facet.rhs);

    ++counts.lex;
    Point next =
        detail::lp_lex_weighted_point(lp, pinned_rows, pinned_rhs, facet.lambda);
    track(1);
    if (!(next[0] < current[0]) || !(current[1] < next[1])) {
      throw InternalError("facet walk failed to progress towards the next vertex");
    }
    result.steps.push_back(WalkStep{current, facet.lambda, facet.rhs, next});

    ++result.log.loop_iterations;
    result.front.insert(next);
    recorder.emit(result.log, next);
    current = std::move(next);
    retained -= 1;  // the previous point is released
  }

  recorder.finish(result.log);
  return result;
}

}  // namespace bienum
