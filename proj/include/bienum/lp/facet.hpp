#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "bienum/errors.hpp"
#include "bienum/lp/instance.hpp"
#include "bienum/lp/lex_solve.hpp"
#include "bienum/lp/simplex.hpp"
#include "bienum/oracle.hpp"
#include "bienum/point.hpp"
#include "bienum/rational.hpp"

namespace bienum {

namespace detail {

inline void require_biobjective(const LPInstance& lp) {
  lp.validate();
  if (lp.objective_count() != 2) {
    throw UsageError("operation requires a biobjective LP");
  }
}

/// Maps the status of the dual support program back to the primal instance:
/// an infeasible dual means no weighted-sum scalarization of the primal has
/// a finite optimum (no ideal point), an unbounded dual is a Farkas
/// certificate that the primal constraints are infeasible.
[[noreturn]] inline void throw_from_dual_status(SolveStatus status) {
  switch (status) {
    case SolveStatus::Infeasible:
      throw UnboundedError(
          "no finite ideal point: every weighted-sum scalarization is unbounded");
    case SolveStatus::Unbounded:
      throw InfeasibleError("constraint system is infeasible");
    default:
      throw InternalError("optimal dual status mapped as a failure");
  }
}

}  // namespace detail

/// Dual support program of a biobjective LP at a query point y, with
/// variables z = (u, λ) ≥ 0:
///   maximize  bᵀu − yᵀλ   s.t.   Aᵀu = Cᵀλ,   λ₁ + λ₂ = 1.
/// Its optimum is 0 exactly when y lies on the nondominated boundary of the
/// upper image, negative for interior points, and positive when y is
/// separated from the image.  The program is returned in the instance
/// layout (minimization of the negated objective, equalities as paired ≥
/// rows, explicit sign rows).
inline LPInstance dual_support_lp(const LPInstance& lp, const Point& y) {
  detail::require_biobjective(lp);
  if (y.dimension() != 2) {
    throw UsageError("query point must be two-dimensional");
  }
  const std::size_t m = lp.constraint_count();
  const std::size_t n = lp.variable_count();
  const std::size_t total = m + 2;  // u | λ

  LPInstance dual;
  Vector objective(total, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    objective[i] = -lp.rhs[i];
  }
  objective[m] = y[0];
  objective[m + 1] = y[1];
  dual.objectives.push_back(std::move(objective));

  const auto push_equality = [&](Vector row, Rational value) {
    Vector negated(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      negated[j] = -row[j];
    }
    dual.constraints.push_back(std::move(row));
    dual.rhs.push_back(value);
    dual.constraints.push_back(std::move(negated));
    dual.rhs.push_back(-value);
  };

  for (std::size_t k = 0; k < n; ++k) {
    Vector row(total, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      row[i] = lp.constraints[i][k];
    }
    row[m] = -lp.objectives[0][k];
    row[m + 1] = -lp.objectives[1][k];
    push_equality(std::move(row), Rational(0));
  }
  {
    Vector row(total, Rational(0));
    row[m] = 1;
    row[m + 1] = 1;
    push_equality(std::move(row), Rational(1));
  }
  for (std::size_t j = 0; j < total; ++j) {
    Vector row(total, Rational(0));
    row[j] = 1;
    dual.constraints.push_back(std::move(row));
    dual.rhs.push_back(Rational(0));
  }
  return dual;
}

/// Exact optimum of the dual support program at y.  Throws UnboundedError
/// when the instance has no finite ideal point and InfeasibleError when its
/// constraint system is empty.
inline Rational dual_support_optimum(const LPInstance& lp, const Point& y,
                                     std::uint64_t pivot_cap = kDefaultPivotCap) {
  const LPInstance dual = dual_support_lp(lp, y);
  const LPOutcome out = simplex_solve(dual, 0, pivot_cap);
  if (out.status != SolveStatus::Optimal) {
    detail::throw_from_dual_status(out.status);
  }
  return -*out.value;
}

/// Maximizer of the dual support program selected lexicographically: among
/// all optimal (u, λ) the one whose λ is lexicographically largest.
struct DualSupport {
  Vector u;
  Weight lambda{};
  Rational support_value;  // bᵀu, the supporting hyperplane's right-hand side
  Rational optimum;        // bᵀu − yᵀλ at the maximizer
  std::uint64_t pivots = 0;
};

/// Solves the dual support program at y three times, pinning first the
/// optimum, then the largest λ₁, then λ₂.  The λ of the answer is the
/// lexicographically maximal weight among all maximizers, so at a vertex of
/// the upper image it selects the steeper of the two incident facets.
inline DualSupport lex_max_dual_weight(const LPInstance& lp, const Point& y,
                                       std::uint64_t pivot_cap = kDefaultPivotCap) {
  const LPInstance dual = dual_support_lp(lp, y);
  const std::size_t m = lp.constraint_count();
  const std::size_t total = m + 2;
  Matrix stages;
  stages.push_back(dual.objectives.front());
  Vector maximize_l1(total, Rational(0));
  maximize_l1[m] = -1;
  stages.push_back(std::move(maximize_l1));
  Vector maximize_l2(total, Rational(0));
  maximize_l2[m + 1] = -1;
  stages.push_back(std::move(maximize_l2));

  const LexOutcome out =
      lex_lp_solve(dual.constraints, dual.rhs, stages, pivot_cap);
  if (out.status != SolveStatus::Optimal) {
    detail::throw_from_dual_status(out.status);
  }

  DualSupport support;
  support.pivots = out.pivots;
  const Vector& z = *out.solution;
  support.u.assign(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(m));
  support.lambda = Weight{z[m], z[m + 1]};
  for (std::size_t i = 0; i < m; ++i) {
    support.support_value += lp.rhs[i] * support.u[i];
  }
  support.optimum = -out.stage_values.front();
  return support;
}

/// Supporting hyperplane λᵀz = rhs of the upper image at a boundary point.
struct SupportingFacet {
  Weight lambda{};
  Rational rhs;
};

/// Facet of the upper image supporting it at y, with the lexicographically
/// maximal weight among all supporting weights at y.  Throws UsageError when
/// y is not a boundary point of the upper image.
inline SupportingFacet supporting_facet(const LPInstance& lp, const Point& y,
                                        std::uint64_t pivot_cap = kDefaultPivotCap) {
  DualSupport support = lex_max_dual_weight(lp, y, pivot_cap);
  if (support.optimum != 0) {
    throw UsageError("query point is not on the boundary of the upper image");
  }
  return SupportingFacet{support.lambda, std::move(support.support_value)};
}

}  // namespace bienum
