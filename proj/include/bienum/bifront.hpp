#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <vector>

#include "bienum/errors.hpp"
#include "bienum/point.hpp"

namespace bienum {

/// A set of mutually nondominated biobjective points kept sorted by
/// strictly increasing first coordinate (hence strictly decreasing second).
/// Insertion preserves the invariant by rejecting dominated candidates and
/// evicting points the candidate dominates.
class BiFront {
 public:
  BiFront() = default;

  /// Inserts `y` if no stored point dominates or equals it, removing any
  /// stored points it dominates.  Returns true iff `y` was kept.
  bool insert(const Point& y) {
    require_dim2(y);
    const auto at = std::lower_bound(
        points_.begin(), points_.end(), y,
        [](const Point& p, const Point& q) { return p[0] < q[0]; });
    if (at != points_.begin()) {
      const Point& left = *std::prev(at);
      if (left[1] <= y[1]) {
        return false;  // dominated by a point with smaller first coordinate
      }
    }
    if (at != points_.end() && (*at)[0] == y[0] && (*at)[1] <= y[1]) {
      return false;  // dominated by (or equal to) the point sharing y1
    }
    auto last = at;
    while (last != points_.end() && (*last)[1] >= y[1]) {
      ++last;  // these are dominated by y
    }
    const auto pos = points_.erase(at, last);
    points_.insert(pos, y);
    return true;
  }

  bool contains(const Point& y) const {
    require_dim2(y);
    const auto at = std::lower_bound(
        points_.begin(), points_.end(), y,
        [](const Point& p, const Point& q) { return p[0] < q[0]; });
    return at != points_.end() && *at == y;
  }

  const std::vector<Point>& points() const { return points_; }

  std::size_t size() const { return points_.size(); }

  bool empty() const { return points_.empty(); }

  friend bool operator==(const BiFront&, const BiFront&) = default;

 private:
  static void require_dim2(const Point& y) {
    if (y.dimension() != 2) {
      throw UsageError("BiFront stores biobjective points only");
    }
  }

  std::vector<Point> points_;
};

/// Value-semantics insertion: returns the front with `y` merged in.
inline BiFront archive_insert(BiFront front, const Point& y) {
  front.insert(y);
  return front;
}

/// Returns the nondominated subset of `points` with duplicates removed, in
/// lexicographic order.  Dimension 2 uses a sort-and-sweep pass; any other
/// dimension falls back to pairwise comparison.
inline std::vector<Point> pareto_filter(const std::vector<Point>& points) {
  if (points.empty()) {
    return {};
  }
  const std::size_t dim = points.front().dimension();
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end(), LexLess{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  if (dim == 2) {
    // In lexicographic order every dominator of a point precedes it, so one
    // sweep tracking the smallest second coordinate seen suffices.
    std::vector<Point> kept;
    for (const Point& p : sorted) {
      if (p.dimension() != 2) {
        throw UsageError("points of different dimension are not comparable");
      }
      if (kept.empty() || p[1] < kept.back()[1]) {
        kept.push_back(p);
      }
    }
    return kept;
  }

  std::vector<Point> kept;
  for (const Point& p : sorted) {
    bool is_dominated = false;
    for (const Point& q : sorted) {
      if (dominates(q, p)) {
        is_dominated = true;
        break;
      }
    }
    if (!is_dominated) {
      kept.push_back(p);
    }
  }
  return kept;
}

namespace detail {

/// Cross product of (b - a) and (c - a); positive iff the chain a, b, c
/// turns counterclockwise.
inline Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

}  // namespace detail

/// Extreme points of `points`: the vertices of the lower-left convex hull
/// of the nondominated subset, i.e. exactly the points obtainable as unique
/// optima of weighted sums with positive weights.  Points interior to a
/// hull edge are dropped.
inline BiFront hull_extremes_2d(const std::vector<Point>& points) {
  for (const Point& p : points) {
    if (p.dimension() != 2) {
      throw UsageError("hull_extremes_2d expects biobjective points");
    }
  }
  const std::vector<Point> staircase = pareto_filter(points);
  // Monotone chain over the staircase (first coordinate strictly increasing,
  // second strictly decreasing); collinear middle points are popped.
  std::vector<Point> chain;
  for (const Point& p : staircase) {
    while (chain.size() >= 2 &&
           detail::cross(chain[chain.size() - 2], chain.back(), p) <= 0) {
      chain.pop_back();
    }
    chain.push_back(p);
  }
  BiFront front;
  for (const Point& p : chain) {
    front.insert(p);
  }
  return front;
}

}  // namespace bienum
