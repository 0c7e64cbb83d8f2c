#pragma once

#include <utility>

#include "bienum/bifront.hpp"
#include "bienum/enumeration_log.hpp"
#include "bienum/errors.hpp"
#include "bienum/oracle.hpp"

namespace bienum {

/// Full Pareto-front enumeration by an ε-constraint sweep, for biobjective
/// images.  Each call minimizes objective 2 subject to a strict upper bound
/// on objective 1 (ties broken by smaller objective 1), emits the answer,
/// and tightens the bound to just below the answer's first coordinate.  The
/// strict bound makes a step size unnecessary even on rational images.
///
/// Emits Y_N exactly once each, in strictly decreasing objective-1 order,
/// using exactly |Y_N| + 1 oracle calls: every call but the last discovers
/// a new point, and the last certifies termination.  An infeasible first
/// call yields an empty front (not an error).
inline EnumerationResult eps_constraint_front(ScalarizationOracle& oracle,
                                              const EmitFn& on_emit = {},
                                              bool record_time = false) {
  detail::RunRecorder rec(oracle.calls(), on_emit, record_time);
  EnumerationLog log;
  BiFront front;

  ObjectiveBound bound = ObjectiveBound::none();
  while (true) {
    const OracleAnswer ans = oracle.eps_constraint(bound);
    if (ans.status == OracleStatus::Infeasible) {
      break;
    }
    if (ans.status != OracleStatus::Optimal) {
      throw UnboundedError("eps-constraint oracle reports unbounded");
    }
    ++log.loop_iterations;
    if (!bound.admits(ans.point[0])) {
      throw InternalError("eps-constraint answer violates its bound");
    }
    if (!front.insert(ans.point)) {
      throw InternalError("eps-constraint sweep revisited a dominated point");
    }
    rec.emit(log, ans.point);
    bound = ObjectiveBound::below(ans.point[0]);
  }
  rec.finish(log);
  return EnumerationResult{std::move(front), std::move(log)};
}

}  // namespace bienum
