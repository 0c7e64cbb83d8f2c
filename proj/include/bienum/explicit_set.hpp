#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bienum/errors.hpp"
#include "bienum/oracle.hpp"
#include "bienum/point.hpp"
#include "bienum/rational.hpp"

namespace bienum {

/// Oracle over an explicitly listed biobjective image.  Supports all three
/// scalarization modes by exhaustive scan, breaking weighted-sum ties by
/// the lowest index, which keeps answers deterministic while still
/// exercising the enumerators with non-lexicographic optima.
class ExplicitSetOracle : public ScalarizationOracle {
 public:
  explicit ExplicitSetOracle(std::vector<Point> points)
      : points_(std::move(points)) {
    for (const Point& p : points_) {
      if (p.dimension() != 2) {
        throw UsageError("explicit-set oracle expects biobjective points");
      }
    }
  }

  const std::vector<Point>& points() const { return points_; }

 protected:
  OracleAnswer do_weighted_sum(const Weight& w) override {
    std::size_t best = points_.size();
    Rational best_value;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const Rational value = weighted_value(w, points_[i]);
      if (best == points_.size() || value < best_value) {
        best = i;
        best_value = value;
      }
    }
    return answer_for(best);
  }

  OracleAnswer do_lex_weighted_sum(const Weight& w) override {
    std::size_t best = points_.size();
    Rational best_value;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const Rational value = weighted_value(w, points_[i]);
      if (best == points_.size() || value < best_value ||
          (value == best_value && lex_less(points_[i], points_[best]))) {
        best = i;
        best_value = value;
      }
    }
    return answer_for(best);
  }

  OracleAnswer do_eps_constraint(const ObjectiveBound& bound) override {
    std::size_t best = points_.size();
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const Point& p = points_[i];
      if (!bound.admits(p[0])) {
        continue;
      }
      if (best == points_.size() || p[1] < points_[best][1] ||
          (p[1] == points_[best][1] && p[0] < points_[best][0])) {
        best = i;
      }
    }
    return answer_for(best);
  }

 private:
  OracleAnswer answer_for(std::size_t index) const {
    if (index == points_.size()) {
      return OracleAnswer::infeasible();
    }
    Solution sol;
    sol.select.assign(points_.size(), 0);
    sol.select[index] = 1;
    return OracleAnswer::optimal(points_[index], std::move(sol));
  }

  std::vector<Point> points_;
};

/// Parses the explicit-set file format: one point per line, two rationals
/// separated by whitespace.  Blank lines are ignored.
inline std::vector<Point> parse_explicit_set(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string first;
    if (!(row >> first)) {
      continue;  // blank line
    }
    std::string second;
    std::string extra;
    if (!(row >> second) || (row >> extra)) {
      throw UsageError("explicit-set line " + std::to_string(line_no) +
                       ": expected exactly two rationals");
    }
    points.emplace_back(parse_rational(first), parse_rational(second));
  }
  return points;
}

inline void write_explicit_set(std::ostream& out,
                               const std::vector<Point>& points) {
  for (const Point& p : points) {
    out << format_rational(p[0]) << ' ' << format_rational(p[1]) << '\n';
  }
}

}  // namespace bienum
