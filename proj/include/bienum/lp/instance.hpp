#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bienum/errors.hpp"
#include "bienum/point.hpp"
#include "bienum/rational.hpp"

namespace bienum {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Exact data of a multiobjective linear program
///   minimize each row of C·x   subject to   A·x ≥ b,   x free.
/// The constraint sense is fixed; equalities are expressed as paired ≥ rows
/// and variable sign restrictions are ordinary rows of A.
struct LPInstance {
  Matrix objectives;   // C: d rows of length n
  Matrix constraints;  // A: m rows of length n
  Vector rhs;          // b: m entries

  std::size_t objective_count() const { return objectives.size(); }
  std::size_t constraint_count() const { return constraints.size(); }
  std::size_t variable_count() const {
    return objectives.empty() ? 0 : objectives.front().size();
  }

  /// Checks rectangular shape and matching dimensions.
  void validate() const {
    if (objectives.empty()) {
      throw UsageError("LP needs at least one objective row");
    }
    const std::size_t n = objectives.front().size();
    if (n == 0) {
      throw UsageError("LP needs at least one variable");
    }
    for (const Vector& row : objectives) {
      if (row.size() != n) {
        throw UsageError("ragged objective matrix");
      }
    }
    if (constraints.size() != rhs.size()) {
      throw UsageError("constraint rows and right-hand sides differ in count");
    }
    for (const Vector& row : constraints) {
      if (row.size() != n) {
        throw UsageError("ragged constraint matrix");
      }
    }
  }

  /// Image C·x of a solution vector (biobjective instances).
  Point image(const Vector& x) const {
    if (objective_count() != 2 || x.size() != variable_count()) {
      throw UsageError("image expects a biobjective LP and a full solution");
    }
    Rational y1, y2;
    for (std::size_t j = 0; j < x.size(); ++j) {
      y1 += objectives[0][j] * x[j];
      y2 += objectives[1][j] * x[j];
    }
    return Point(y1, y2);
  }
};

enum class SolveStatus { Optimal, Infeasible, Unbounded };

/// Result of a single-objective exact solve; `solution` and `value` are
/// present iff `status` is Optimal.
struct LPOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Vector> solution;
  std::optional<Rational> value;
  std::uint64_t pivots = 0;
};

/// Parses the LP file format: line 1 is "d n m", followed by d objective
/// rows of n entries, then m constraint rows of n entries plus the
/// right-hand side.  Entries are rationals ("p/q" or integers).
inline LPInstance parse_lp(std::istream& in) {
  const auto read_tokens = [&](std::size_t count,
                               const std::string& what) -> std::vector<std::string> {
    std::vector<std::string> tokens;
    tokens.reserve(count);
    std::string tok;
    while (tokens.size() < count && in >> tok) {
      tokens.push_back(tok);
    }
    if (tokens.size() < count) {
      throw UsageError("LP file ended while reading " + what);
    }
    return tokens;
  };

  long long d = 0, n = 0, m = 0;
  {
    const auto header = read_tokens(3, "the header");
    try {
      d = std::stoll(header[0]);
      n = std::stoll(header[1]);
      m = std::stoll(header[2]);
    } catch (const std::exception&) {
      throw UsageError("LP header must be three integers 'd n m'");
    }
    if (d < 1 || n < 1 || m < 0) {
      throw UsageError("LP header out of range: need d ≥ 1, n ≥ 1, m ≥ 0");
    }
  }

  LPInstance lp;
  for (long long i = 0; i < d; ++i) {
    Vector row;
    for (const auto& tok : read_tokens(n, "an objective row")) {
      row.push_back(parse_rational(tok));
    }
    lp.objectives.push_back(std::move(row));
  }
  for (long long i = 0; i < m; ++i) {
    Vector row;
    for (const auto& tok : read_tokens(n + 1, "a constraint row")) {
      row.push_back(parse_rational(tok));
    }
    lp.rhs.push_back(row.back());
    row.pop_back();
    lp.constraints.push_back(std::move(row));
  }
  std::string extra;
  if (in >> extra) {
    throw UsageError("trailing content in LP file: '" + extra + "'");
  }
  lp.validate();
  return lp;
}

inline void write_lp(std::ostream& out, const LPInstance& lp) {
  lp.validate();
  out << lp.objective_count() << ' ' << lp.variable_count() << ' '
      << lp.constraint_count() << '\n';
  const auto write_row = [&](const Vector& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? " " : "") << format_rational(row[j]);
    }
  };
  for (const Vector& row : lp.objectives) {
    write_row(row);
    out << '\n';
  }
  for (std::size_t i = 0; i < lp.constraint_count(); ++i) {
    write_row(lp.constraints[i]);
    out << ' ' << format_rational(lp.rhs[i]) << '\n';
  }
}

}  // namespace bienum
