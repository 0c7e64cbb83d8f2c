#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bienum/bifront.hpp"
#include "bienum/errors.hpp"
#include "bienum/point.hpp"
#include "bienum/rational.hpp"

namespace bienum {

/// Unconstrained biobjective problem min {(cᵀx, −cᵀx) : x ∈ {0,1}ⁿ} over a
/// nonnegative integer vector c.  Every image point lies on y₂ = −y₁, so
/// the whole image is mutually nondominated and Y_N collects the distinct
/// subset sums.
struct UnconstrainedBi {
  std::vector<Int> c;

  void validate() const {
    for (const Int& v : c) {
      if (v < 0) {
        throw UsageError("subset-sum coefficients must be nonnegative");
      }
    }
  }
};

using FrontSnapshotFn = std::function<void(const BiFront&)>;

/// Incremental subset-sum front: F₀ = {(0,0)} and Fᵢ₊₁ is the Pareto merge
/// of Fᵢ with Fᵢ translated by (cᵢ₊₁, −cᵢ₊₁).  Every snapshot F₀ … Fₙ is
/// reported through the callback; when all cᵢ are positive each snapshot
/// strictly extends its predecessor (the merge adds at least the new
/// maximal sum), which is the incremental-delay property of this method.
inline BiFront subset_sum_front(const UnconstrainedBi& instance,
                                const FrontSnapshotFn& on_snapshot = {}) {
  instance.validate();
  BiFront front;
  front.insert(Point(Rational(0), Rational(0)));
  if (on_snapshot) {
    on_snapshot(front);
  }
  for (const Int& coefficient : instance.c) {
    const Rational shift(coefficient);
    std::vector<Point> merged = front.points();
    merged.reserve(front.size() * 2);
    for (const Point& p : front.points()) {
      merged.emplace_back(p[0] + shift, p[1] - shift);
    }
    BiFront next;
    for (const Point& p : pareto_filter(merged)) {
      next.insert(p);
    }
    front = std::move(next);
    if (on_snapshot) {
      on_snapshot(front);
    }
  }
  return front;
}

/// Parses the unconstrained problem format: "unconstrained n" followed by
/// n nonnegative integers.
inline UnconstrainedBi parse_unconstrained(std::istream& in) {
  std::string keyword;
  if (!(in >> keyword) || keyword != "unconstrained") {
    throw UsageError("expected 'unconstrained n' header");
  }
  long long n = 0;
  if (!(in >> n) || n < 0) {
    throw UsageError("unconstrained header needs a nonnegative count");
  }
  UnconstrainedBi instance;
  for (long long i = 0; i < n; ++i) {
    std::string token;
    if (!(in >> token)) {
      throw UsageError("unconstrained file ended inside the coefficient list");
    }
    const Rational value = parse_rational(token);
    if (!is_integer(value)) {
      throw UsageError("subset-sum coefficients must be integers");
    }
    instance.c.push_back(numerator(value));
  }
  std::string extra;
  if (in >> extra) {
    throw UsageError("trailing content in unconstrained file: '" + extra + "'");
  }
  instance.validate();
  return instance;
}

inline void write_unconstrained(std::ostream& out,
                                const UnconstrainedBi& instance) {
  out << "unconstrained " << instance.c.size() << '\n';
  for (std::size_t i = 0; i < instance.c.size(); ++i) {
    out << (i ? " " : "") << instance.c[i].str();
  }
  if (!instance.c.empty()) {
    out << '\n';
  }
}

}  // namespace bienum
