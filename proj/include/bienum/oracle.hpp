#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "bienum/errors.hpp"
#include "bienum/point.hpp"
#include "bienum/rational.hpp"

namespace bienum {

/// Weight vector of a weighted-sum scalarization.  Components must be
/// nonnegative and not both zero; weights are used unnormalized.
using Weight = std::array<Rational, 2>;

inline Rational weighted_value(const Weight& w, const Point& y) {
  if (y.dimension() != 2) {
    throw UsageError("weighted_value expects a biobjective point");
  }
  return w[0] * y[0] + w[1] * y[1];
}

/// A feasible solution attached to an oracle answer.  Combinatorial
/// problems fill `select` (indicator over ground elements); continuous
/// problems fill `coords` (variable assignment).
struct Solution {
  std::vector<std::uint8_t> select;
  std::vector<Rational> coords;

  friend bool operator==(const Solution&, const Solution&) = default;
};

enum class OracleStatus { Optimal, Infeasible, Unbounded };

/// Outcome of one scalarized solve.  `point` and `solution` are meaningful
/// only when `status` is Optimal.
struct OracleAnswer {
  OracleStatus status = OracleStatus::Infeasible;
  Point point;
  Solution solution;

  static OracleAnswer optimal(Point y, Solution s = {}) {
    return OracleAnswer{OracleStatus::Optimal, std::move(y), std::move(s)};
  }
  static OracleAnswer infeasible() { return OracleAnswer{}; }

  bool is_optimal() const { return status == OracleStatus::Optimal; }
};

/// Bound placed on objective 1 by the ε-constraint scalarization: absent,
/// weak (y₁ ≤ v), or strict (y₁ < v).  The strict form is what the sweep
/// driver uses; it removes the need for a gap-dependent step size on
/// rational-valued instances.
class ObjectiveBound {
 public:
  static ObjectiveBound none() { return ObjectiveBound(); }

  static ObjectiveBound at_most(Rational v) {
    ObjectiveBound b;
    b.value_ = std::move(v);
    b.bounded_ = true;
    b.strict_ = false;
    return b;
  }

  static ObjectiveBound below(Rational v) {
    ObjectiveBound b;
    b.value_ = std::move(v);
    b.bounded_ = true;
    b.strict_ = true;
    return b;
  }

  bool is_bounded() const { return bounded_; }
  bool is_strict() const { return strict_; }

  const Rational& value() const {
    if (!bounded_) {
      throw UsageError("unbounded ObjectiveBound has no value");
    }
    return value_;
  }

  /// True iff a point with first objective `y1` satisfies the bound.
  bool admits(const Rational& y1) const {
    if (!bounded_) {
      return true;
    }
    return strict_ ? y1 < value_ : y1 <= value_;
  }

 private:
  Rational value_;
  bool bounded_ = false;
  bool strict_ = false;
};

/// Cumulative scalarization-call counters; the deterministic surrogate for
/// delay measurements.
struct OracleCallCounts {
  std::uint64_t ws = 0;
  std::uint64_t lex = 0;
  std::uint64_t eps = 0;

  std::uint64_t total() const { return ws + lex + eps; }

  friend bool operator==(const OracleCallCounts&,
                         const OracleCallCounts&) = default;
};

/// Contract every enumerator is driven through: weighted-sum, lexicographic
/// weighted-sum, and ε-constraint solvers over an implicit solution set.
///
/// The public entry points validate weights and count calls; concrete
/// oracles implement the protected hooks.  Modes an oracle does not support
/// throw UsageError.  Answers must be deterministic.  An instance may be
/// reused across runs (counters keep growing; enumerators snapshot them),
/// but must not be shared by concurrently running enumerations.
class ScalarizationOracle {
 public:
  virtual ~ScalarizationOracle() = default;

  /// min ℓᵀy over the image; any optimal point may be returned.
  OracleAnswer weighted_sum(const Weight& w) {
    require_valid_weight(w);
    ++counts_.ws;
    return do_weighted_sum(w);
  }

  /// Lexicographically minimal (ℓᵀy, y₁, y₂) over the image; the answer is
  /// the unique lex-least point among the ℓ-optima.
  OracleAnswer lex_weighted_sum(const Weight& w) {
    require_valid_weight(w);
    ++counts_.lex;
    return do_lex_weighted_sum(w);
  }

  /// min y₂ subject to the bound on y₁, ties broken by smaller y₁.
  OracleAnswer eps_constraint(const ObjectiveBound& bound) {
    ++counts_.eps;
    return do_eps_constraint(bound);
  }

  const OracleCallCounts& calls() const { return counts_; }

 protected:
  virtual OracleAnswer do_weighted_sum(const Weight&) {
    throw UsageError("weighted-sum scalarization not supported by oracle");
  }
  virtual OracleAnswer do_lex_weighted_sum(const Weight&) {
    throw UsageError("lexicographic scalarization not supported by oracle");
  }
  virtual OracleAnswer do_eps_constraint(const ObjectiveBound&) {
    throw UsageError("eps-constraint scalarization not supported by oracle");
  }

 private:
  static void require_valid_weight(const Weight& w) {
    if (w[0] < 0 || w[1] < 0 || (w[0] == 0 && w[1] == 0)) {
      throw UsageError("scalarization weight must be nonnegative and not 0");
    }
  }

  OracleCallCounts counts_;
};

}  // namespace bienum
