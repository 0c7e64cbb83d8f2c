#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bienum/errors.hpp"
#include "bienum/lp/instance.hpp"
#include "bienum/rational.hpp"

namespace bienum {

/// Safety net against pivoting bugs; Bland's rule guarantees termination,
/// so reaching this cap indicates an internal error, not a hard instance.
inline constexpr std::uint64_t kDefaultPivotCap = 1u << 22;

namespace detail {

/// Dense exact full tableau.  Each body row stores an equality-form
/// constraint with the right-hand side in the final slot; `cost` stores the
/// reduced-cost row whose final slot holds the negated objective value of
/// the current basis.
struct Tableau {
  std::size_t cols = 0;  // structural columns, excluding the rhs slot
  Matrix body;
  Vector cost;
  std::vector<std::size_t> basis;  // basic column per row
  std::uint64_t pivots = 0;

  static void eliminate(Vector& row, const Vector& pivot_row, std::size_t c) {
    if (row[c] == 0) {
      return;
    }
    const Rational factor = row[c];
    for (std::size_t j = 0; j < row.size(); ++j) {
      row[j] -= factor * pivot_row[j];
    }
    row[c] = 0;
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots;
    Vector& pivot_row = body[r];
    const Rational inv = pivot_row[c];
    for (Rational& v : pivot_row) {
      v /= inv;
    }
    pivot_row[c] = 1;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i != r) {
        eliminate(body[i], pivot_row, c);
      }
    }
    eliminate(cost, pivot_row, c);
    basis[r] = c;
  }

  /// Bland's entering rule: lowest-index column with negative reduced cost.
  std::optional<std::size_t> entering() const {
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        return j;
      }
    }
    return std::nullopt;
  }

  /// Minimum-ratio leaving rule; ties are broken towards the smallest basic
  /// column index (Bland), which rules out cycling.
  std::optional<std::size_t> leaving(std::size_t c) const {
    std::optional<std::size_t> best;
    Rational best_ratio;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i][c] <= 0) {
        continue;
      }
      const Rational ratio = body[i][cols] / body[i][c];
      if (!best || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[*best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  /// Pivots to optimality or detects an unbounded ray.
  SolveStatus run(std::uint64_t pivot_cap) {
    while (const auto c = entering()) {
      const auto r = leaving(*c);
      if (!r) {
        return SolveStatus::Unbounded;
      }
      if (pivots >= pivot_cap) {
        throw InternalError("simplex pivot cap exceeded");
      }
      pivot(*r, *c);
    }
    return SolveStatus::Optimal;
  }

  /// Rewrites `cost` in terms of the nonbasic columns.
  void price_out_basis() {
    for (std::size_t r = 0; r < body.size(); ++r) {
      eliminate(cost, body[r], basis[r]);
    }
  }
};

}  // namespace detail

/// Exact primal simplex for  min cᵀx  s.t.  A·x ≥ b  with free variables.
/// Free variables are split as x = x⁺ − x⁻, surpluses turn rows into
/// equalities, and phase 1 drives a full artificial basis to zero.  Both
/// phases pivot under Bland's rule, so the run terminates without cycling.
inline LPOutcome simplex_minimize(const Matrix& A, const Vector& b,
                                  const Vector& c,
                                  std::uint64_t pivot_cap = kDefaultPivotCap) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (n == 0) {
    throw UsageError("simplex needs at least one variable");
  }
  if (b.size() != m) {
    throw UsageError("right-hand side size does not match constraint count");
  }
  for (const Vector& row : A) {
    if (row.size() != n) {
      throw UsageError("ragged constraint matrix");
    }
  }

  const std::size_t real_cols = 2 * n + m;  // x⁺ | x⁻ | surplus
  detail::Tableau t;
  t.cols = real_cols + m;  // plus one artificial per row
  t.body.assign(m, Vector(t.cols + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    Vector& row = t.body[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = sign * A[i][j];
      row[n + j] = -row[j];
    }
    row[2 * n + i] = -sign;
    row[real_cols + i] = 1;
    row[t.cols] = sign * b[i];
    t.basis[i] = real_cols + i;
  }

  // Phase 1: minimize the sum of artificials.
  t.cost.assign(t.cols + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    t.cost[real_cols + i] = 1;
  }
  t.price_out_basis();
  if (t.run(pivot_cap) != SolveStatus::Optimal) {
    throw InternalError("phase-1 objective is bounded below yet reported unbounded");
  }
  if (t.cost[t.cols] != 0) {
    return LPOutcome{SolveStatus::Infeasible, std::nullopt, std::nullopt,
                     t.pivots};
  }

  // Drive leftover artificials out of the basis; rows with no real pivot
  // column are redundant and dropped.
  std::vector<bool> drop(m, false);
  for (std::size_t r = 0; r < t.body.size(); ++r) {
    if (t.basis[r] < real_cols) {
      continue;
    }
    bool pivoted = false;
    for (std::size_t j = 0; j < real_cols; ++j) {
      if (t.body[r][j] != 0) {
        t.pivot(r, j);
        pivoted = true;
        break;
      }
    }
    if (!pivoted) {
      drop[r] = true;
    }
  }
  {
    Matrix kept_rows;
    std::vector<std::size_t> kept_basis;
    for (std::size_t r = 0; r < t.body.size(); ++r) {
      if (drop[r]) {
        continue;
      }
      Vector row(std::move(t.body[r]));
      row.erase(row.begin() + static_cast<std::ptrdiff_t>(real_cols),
                row.begin() + static_cast<std::ptrdiff_t>(t.cols));
      kept_rows.push_back(std::move(row));
      kept_basis.push_back(t.basis[r]);
    }
    t.body = std::move(kept_rows);
    t.basis = std::move(kept_basis);
    t.cols = real_cols;
  }

  // Phase 2: original objective over the feasible tableau.
  t.cost.assign(t.cols + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    t.cost[j] = c[j];
    t.cost[n + j] = -c[j];
  }
  t.price_out_basis();
  if (t.run(pivot_cap) == SolveStatus::Unbounded) {
    return LPOutcome{SolveStatus::Unbounded, std::nullopt, std::nullopt,
                     t.pivots};
  }

  Vector split(real_cols, Rational(0));
  for (std::size_t r = 0; r < t.body.size(); ++r) {
    split[t.basis[r]] = t.body[r][t.cols];
  }
  Vector x(n);
  Rational value;
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = split[j] - split[n + j];
    value += c[j] * x[j];
  }
  return LPOutcome{SolveStatus::Optimal, std::move(x), std::move(value),
                   t.pivots};
}

/// Solves one objective row of an LP instance.
inline LPOutcome simplex_solve(const LPInstance& lp, std::size_t objective_row = 0,
                               std::uint64_t pivot_cap = kDefaultPivotCap) {
  lp.validate();
  if (objective_row >= lp.objective_count()) {
    throw UsageError("objective row index out of range");
  }
  return simplex_minimize(lp.constraints, lp.rhs, lp.objectives[objective_row],
                          pivot_cap);
}

}  // namespace bienum
