#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bienum/bifront.hpp"
#include "bienum/errors.hpp"
#include "bienum/lp/instance.hpp"
#include "bienum/point.hpp"
#include "bienum/rational.hpp"

namespace bienum {
namespace detail {

/// Exact Gauss–Jordan solve of a square system; nullopt when singular.
inline std::optional<Vector> solve_square(Matrix M, Vector rhs) {
  const std::size_t n = M.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && M[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == n) {
      return std::nullopt;
    }
    std::swap(M[pivot], M[c]);
    std::swap(rhs[pivot], rhs[c]);
    const Rational inv = M[c][c];
    for (Rational& v : M[c]) {
      v /= inv;
    }
    rhs[c] /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || M[i][c] == 0) {
        continue;
      }
      const Rational factor = M[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        M[i][j] -= factor * M[c][j];
      }
      rhs[i] -= factor * rhs[c];
    }
  }
  return rhs;
}

inline std::size_t matrix_rank(Matrix M) {
  const std::size_t cols = M.empty() ? 0 : M.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < M.size() && M[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == M.size()) {
      continue;
    }
    std::swap(M[pivot], M[r]);
    for (std::size_t i = r + 1; i < M.size(); ++i) {
      if (M[i][c] == 0) {
        continue;
      }
      const Rational factor = M[i][c] / M[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        M[i][j] -= factor * M[r][j];
      }
    }
    ++r;
  }
  return r;
}

/// Direction spanning the kernel of a row system with nullity exactly one;
/// nullopt otherwise.
inline std::optional<Vector> kernel_direction(Matrix M, std::size_t n) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < M.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < M.size() && M[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == M.size()) {
      continue;
    }
    std::swap(M[pivot], M[r]);
    const Rational inv = M[r][c];
    for (Rational& v : M[r]) {
      v /= inv;
    }
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || M[i][c] == 0) {
        continue;
      }
      const Rational factor = M[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        M[i][j] -= factor * M[r][j];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (pivot_cols.size() + 1 != n) {
    return std::nullopt;
  }
  std::size_t free_col = 0;
  while (free_col < n &&
         std::find(pivot_cols.begin(), pivot_cols.end(), free_col) !=
             pivot_cols.end()) {
    ++free_col;
  }
  Vector direction(n, Rational(0));
  direction[free_col] = 1;
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    direction[pivot_cols[i]] = -M[i][free_col];
  }
  return direction;
}

/// Advances `idx` to the next k-combination of {0,…,limit−1}; false at the end.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t limit) {
  const std::size_t k = idx.size();
  for (std::size_t back = k; back-- > 0;) {
    if (idx[back] + (k - back) < limit) {
      ++idx[back];
      for (std::size_t j = back + 1; j < k; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

inline Int binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  Int result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    result = result * Int(n - i) / Int(i + 1);
  }
  return result;
}

}  // namespace detail

/// Default ceiling on the number of constraint subsets the brute-force
/// vertex enumeration will visit before refusing the instance.
inline constexpr std::uint64_t kDefaultBasisCap = 200000;

/// All basic feasible solutions and extreme recession rays of
/// {x : A·x ≥ b}, found by exhausting row subsets.  Requires the region to
/// be pointed (rank A = n); refuses instances whose subset count exceeds
/// the cap.  This is an independent check of the simplex stack and shares
/// no code with it.
struct VertexEnumeration {
  std::vector<Vector> vertices;
  std::vector<Vector> extreme_rays;
};

inline VertexEnumeration enumerate_polyhedron(
    const Matrix& A, const Vector& b, std::uint64_t cap = kDefaultBasisCap) {
  const std::size_t m = A.size();
  if (m == 0 || b.size() != m) {
    throw UsageError("vertex enumeration needs a nonempty consistent system");
  }
  const std::size_t n = A.front().size();
  for (const Vector& row : A) {
    if (row.size() != n) {
      throw UsageError("ragged constraint matrix");
    }
  }
  if (detail::matrix_rank(A) != n) {
    throw UsageError(
        "vertex enumeration requires full column rank (a pointed region)");
  }
  if (detail::binomial(m, n) + detail::binomial(m, n - 1) > Int(cap)) {
    throw CapacityError("constraint subset count exceeds the enumeration cap");
  }

  const auto satisfies = [&](const Vector& x, const Rational& floor_value,
                             std::size_t row) {
    Rational lhs;
    for (std::size_t j = 0; j < n; ++j) {
      lhs += A[row][j] * x[j];
    }
    return lhs >= floor_value;
  };

  VertexEnumeration result;
  std::set<Vector> seen_vertices;

  if (n <= m) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
      idx[i] = i;
    }
    do {
      Matrix square(n, Vector(n));
      Vector rhs(n);
      for (std::size_t i = 0; i < n; ++i) {
        square[i] = A[idx[i]];
        rhs[i] = b[idx[i]];
      }
      const auto x = detail::solve_square(std::move(square), std::move(rhs));
      if (!x) {
        continue;
      }
      bool feasible = true;
      for (std::size_t row = 0; row < m && feasible; ++row) {
        feasible = satisfies(*x, b[row], row);
      }
      if (feasible && seen_vertices.insert(*x).second) {
        result.vertices.push_back(*x);
      }
    } while (detail::next_combination(idx, m));
  }

  std::set<Vector> seen_rays;
  const auto try_ray = [&](const Vector& r) {
    bool nonzero = false;
    for (const Rational& v : r) {
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) {
      return;
    }
    for (std::size_t row = 0; row < m; ++row) {
      if (!satisfies(r, Rational(0), row)) {
        return;
      }
    }
    if (seen_rays.insert(r).second) {
      result.extreme_rays.push_back(r);
    }
  };

  if (n == 1) {
    try_ray(Vector{Rational(1)});
    try_ray(Vector{Rational(-1)});
  } else {
    std::vector<std::size_t> idx(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      idx[i] = i;
    }
    do {
      Matrix rows;
      for (const std::size_t i : idx) {
        rows.push_back(A[i]);
      }
      const auto direction = detail::kernel_direction(std::move(rows), n);
      if (!direction) {
        continue;
      }
      try_ray(*direction);
      Vector flipped(n);
      for (std::size_t j = 0; j < n; ++j) {
        flipped[j] = -(*direction)[j];
      }
      try_ray(flipped);
    } while (detail::next_combination(idx, m));
  }
  return result;
}

/// Brute-force single-objective solve for cross-checking the simplex:
/// scans every vertex and every extreme ray of the pointed region.
inline LPOutcome brute_minimize(const Matrix& A, const Vector& b,
                                const Vector& c,
                                std::uint64_t cap = kDefaultBasisCap) {
  const VertexEnumeration polyhedron = enumerate_polyhedron(A, b, cap);
  if (polyhedron.vertices.empty()) {
    return LPOutcome{SolveStatus::Infeasible, std::nullopt, std::nullopt, 0};
  }
  const auto objective = [&](const Vector& x) {
    Rational value;
    for (std::size_t j = 0; j < c.size(); ++j) {
      value += c[j] * x[j];
    }
    return value;
  };
  for (const Vector& ray : polyhedron.extreme_rays) {
    if (objective(ray) < 0) {
      return LPOutcome{SolveStatus::Unbounded, std::nullopt, std::nullopt, 0};
    }
  }
  const Vector* best = nullptr;
  Rational best_value;
  for (const Vector& x : polyhedron.vertices) {
    const Rational value = objective(x);
    if (!best || value < best_value ||
        (value == best_value && x < *best)) {
      best = &x;
      best_value = value;
    }
  }
  return LPOutcome{SolveStatus::Optimal, *best, best_value, 0};
}

/// Nondominated extreme points of a biobjective LP's upper image, computed
/// by exhaustive vertex enumeration and a convex-hull sweep.  Throws
/// InfeasibleError for empty regions and UnboundedError when some extreme
/// ray improves an objective without bound (no ideal point).
inline BiFront brute_lp_vertices(const LPInstance& lp,
                                 std::uint64_t cap = kDefaultBasisCap) {
  lp.validate();
  if (lp.objective_count() != 2) {
    throw UsageError("operation requires a biobjective LP");
  }
  const VertexEnumeration polyhedron =
      enumerate_polyhedron(lp.constraints, lp.rhs, cap);
  if (polyhedron.vertices.empty()) {
    throw InfeasibleError("constraint system is infeasible");
  }
  for (const Vector& ray : polyhedron.extreme_rays) {
    const Point image = lp.image(ray);
    if (image[0] < 0 || image[1] < 0) {
      throw UnboundedError(
          "an objective is unbounded along a recession ray: no ideal point");
    }
  }
  std::vector<Point> images;
  images.reserve(polyhedron.vertices.size());
  for (const Vector& x : polyhedron.vertices) {
    images.push_back(lp.image(x));
  }
  return hull_extremes_2d(images);
}

}  // namespace bienum
