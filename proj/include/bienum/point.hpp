#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bienum/errors.hpp"
#include "bienum/rational.hpp"

namespace bienum {

/// A cost vector in objective space.  Most of the library is biobjective
/// (dimension 2); the dominance helpers work for any dimension as long as
/// both operands agree.
class Point {
 public:
  Point() = default;

  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  Point(Rational y1, Rational y2) {
    coords_.reserve(2);
    coords_.push_back(std::move(y1));
    coords_.push_back(std::move(y2));
  }

  std::size_t dimension() const { return coords_.size(); }

  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  const std::vector<Rational>& coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Rational> coords_;
};

namespace detail {

inline void require_same_dimension(const Point& a, const Point& b) {
  if (a.dimension() != b.dimension()) {
    throw UsageError("points of different dimension are not comparable");
  }
}

}  // namespace detail

/// Lexicographic order: first coordinate, then second, and so on.
inline bool lex_less(const Point& a, const Point& b) {
  detail::require_same_dimension(a, b);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] != b[i]) {
      return a[i] < b[i];
    }
  }
  return false;
}

/// Comparator wrapper for ordered containers of points.
struct LexLess {
  bool operator()(const Point& a, const Point& b) const {
    return lex_less(a, b);
  }
};

/// True iff `a` dominates `b`: componentwise `a <= b` and `a != b`.
/// (All objectives are minimized throughout the library.)
inline bool dominates(const Point& a, const Point& b) {
  detail::require_same_dimension(a, b);
  bool strict = false;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a[i] > b[i]) {
      return false;
    }
    if (a[i] < b[i]) {
      strict = true;
    }
  }
  return strict;
}

/// Human-readable form `(p, q)`, used in messages and table output.
inline std::string format_point(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += format_rational(p[i]);
  }
  out += ")";
  return out;
}

}  // namespace bienum
