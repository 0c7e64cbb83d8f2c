#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bienum/errors.hpp"
#include "bienum/lp/instance.hpp"
#include "bienum/lp/simplex.hpp"
#include "bienum/rational.hpp"

namespace bienum {

/// Result of a lexicographic solve.  `stage_values` holds the optimum of
/// each objective stage reached before the run stopped; on success it has
/// one entry per stage and `solution` attains all of them simultaneously.
struct LexOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Vector> solution;
  std::vector<Rational> stage_values;
  std::uint64_t pivots = 0;
};

/// Lexicographic minimization over a sequence of objective rows: each stage
/// minimizes its row subject to the original constraints plus equality pins
/// (as paired ≥ rows) of every earlier stage at its optimum.  Infeasibility
/// can only surface at the first stage; unboundedness is reported for the
/// stage at which it occurs.
inline LexOutcome lex_lp_solve(const Matrix& A, const Vector& b,
                               const Matrix& objectives,
                               std::uint64_t pivot_cap = kDefaultPivotCap) {
  if (objectives.empty()) {
    throw UsageError("lexicographic solve needs at least one objective row");
  }
  Matrix work_rows = A;
  Vector work_rhs = b;
  LexOutcome out;
  for (const Vector& objective : objectives) {
    LPOutcome stage = simplex_minimize(work_rows, work_rhs, objective, pivot_cap);
    out.pivots += stage.pivots;
    if (stage.status != SolveStatus::Optimal) {
      out.status = stage.status;
      return out;
    }
    out.stage_values.push_back(*stage.value);
    out.solution = std::move(stage.solution);

    Vector negated(objective.size());
    for (std::size_t j = 0; j < objective.size(); ++j) {
      negated[j] = -objective[j];
    }
    work_rows.push_back(objective);
    work_rhs.push_back(*stage.value);
    work_rows.push_back(std::move(negated));
    work_rhs.push_back(-*stage.value);
  }
  out.status = SolveStatus::Optimal;
  return out;
}

/// Convenience overload over an LP instance, using a caller-chosen stage
/// sequence (defaults to the instance's own objective rows in order).
inline LexOutcome lex_lp_solve(const LPInstance& lp,
                               std::uint64_t pivot_cap = kDefaultPivotCap) {
  lp.validate();
  return lex_lp_solve(lp.constraints, lp.rhs, lp.objectives, pivot_cap);
}

}  // namespace bienum
