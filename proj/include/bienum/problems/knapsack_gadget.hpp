#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bienum/errors.hpp"
#include "bienum/point.hpp"
#include "bienum/problems/graphs.hpp"
#include "bienum/rational.hpp"

namespace bienum {

/// Binary knapsack feasibility instance: does some x ∈ {0,1}ⁿ satisfy
/// c¹ᵀx ≤ k₁ and c²ᵀx ≥ k₂?  The generality restrictions (component sums
/// exceed the bounds) discard trivially-decidable inputs and are what the
/// reduction's sentinel points rely on.
struct KPInstance {
  std::vector<Int> c1;
  std::vector<Int> c2;
  Int k1;
  Int k2;

  void validate() const {
    if (c1.empty() || c1.size() != c2.size()) {
      throw UsageError("knapsack needs matching nonempty coefficient vectors");
    }
    for (std::size_t i = 0; i < c1.size(); ++i) {
      if (c1[i] <= 0 || c2[i] <= 0) {
        throw UsageError("knapsack coefficients must be positive integers");
      }
    }
    if (k1 <= 0 || k2 <= 0) {
      throw UsageError("knapsack bounds must be positive");
    }
    const Int sum1 = std::accumulate(c1.begin(), c1.end(), Int(0));
    const Int sum2 = std::accumulate(c2.begin(), c2.end(), Int(0));
    if (sum1 <= k1 || sum2 <= k2) {
      throw UsageError(
          "degenerate knapsack: coefficient sums must exceed their bounds");
    }
  }
};

/// Output of the reduction: the chain digraph and the two sentinel points
/// contributed by the detour arcs.  The instance is a Yes-instance exactly
/// when the graph's Pareto front strictly contains {sentinels}.
struct GadgetResult {
  CostDigraph graph;
  std::array<Point, 2> sentinels;
};

/// Reduces knapsack feasibility to biobjective shortest path.  Chain nodes
/// v¹₁ … v¹ₙ₊₁ get ids 0 … n (so s = 0, t = n); detour nodes v²₁ … v²ₙ get
/// ids n+1 … 2n; the auxiliary node v is 2n+1.  Item i contributes the
/// detour arc (v¹ᵢ, v²ᵢ) of cost (c¹ᵢ, 0), the skip arc (v¹ᵢ, v¹ᵢ₊₁) of
/// cost (0, c²ᵢ), and the return arc (v²ᵢ, v¹ᵢ₊₁) of cost (0,0); a chain
/// path for x therefore costs (c¹ᵀx, c²ᵀ(1−x)).  Two extra routes pin the
/// sentinels: arc (s,t) of cost (k₁+1, 0) and path (s,v,t) of cost
/// (0, 1ᵀc² − k₂ + 1).
inline GadgetResult knapsack_to_shortest_path(const KPInstance& kp) {
  kp.validate();
  const std::size_t n = kp.c1.size();
  const Int sum2 = std::accumulate(kp.c2.begin(), kp.c2.end(), Int(0));

  CostDigraph g;
  g.node_count = 2 * n + 2;
  g.source = 0;
  g.target = n;
  const auto chain = [](std::size_t i) { return i - 1; };        // v¹ᵢ, i ∈ [1, n+1]
  const auto detour = [n](std::size_t i) { return n + i; };      // v²ᵢ, i ∈ [1, n]
  const std::size_t aux = 2 * n + 1;                             // v

  for (std::size_t i = 1; i <= n; ++i) {
    g.arcs.push_back(Arc{chain(i), detour(i),
                         Point(Rational(kp.c1[i - 1]), Rational(0))});
    g.arcs.push_back(Arc{chain(i), chain(i + 1),
                         Point(Rational(0), Rational(kp.c2[i - 1]))});
    g.arcs.push_back(Arc{detour(i), chain(i + 1), Point(Rational(0), Rational(0))});
  }
  const Point cap_point(Rational(kp.k1 + 1), Rational(0));
  const Point cover_point(Rational(0), Rational(sum2 - kp.k2 + 1));
  g.arcs.push_back(Arc{g.source, g.target, cap_point});
  g.arcs.push_back(Arc{g.source, aux, cover_point});
  g.arcs.push_back(Arc{aux, g.target, Point(Rational(0), Rational(0))});
  g.validate();
  return GadgetResult{std::move(g), {cap_point, cover_point}};
}

/// Parses the knapsack format: "knapsack n k1 k2" followed by the n entries
/// of c¹ and then the n entries of c².
inline KPInstance parse_knapsack(std::istream& in) {
  std::string keyword;
  if (!(in >> keyword) || keyword != "knapsack") {
    throw UsageError("expected 'knapsack n k1 k2' header");
  }
  long long n = 0;
  std::string k1_token, k2_token;
  if (!(in >> n >> k1_token >> k2_token) || n < 1) {
    throw UsageError("knapsack header needs a positive count and two bounds");
  }
  const auto read_integer = [&](const std::string& token) {
    const Rational value = parse_rational(token);
    if (!is_integer(value)) {
      throw UsageError("knapsack entries must be integers");
    }
    return numerator(value);
  };
  KPInstance kp;
  kp.k1 = read_integer(k1_token);
  kp.k2 = read_integer(k2_token);
  const auto read_vector = [&](std::vector<Int>& out) {
    for (long long i = 0; i < n; ++i) {
      std::string token;
      if (!(in >> token)) {
        throw UsageError("knapsack file ended inside a coefficient list");
      }
      out.push_back(read_integer(token));
    }
  };
  read_vector(kp.c1);
  read_vector(kp.c2);
  std::string extra;
  if (in >> extra) {
    throw UsageError("trailing content in knapsack file: '" + extra + "'");
  }
  kp.validate();
  return kp;
}

inline void write_knapsack(std::ostream& out, const KPInstance& kp) {
  out << "knapsack " << kp.c1.size() << ' ' << kp.k1.str() << ' '
      << kp.k2.str() << '\n';
  for (std::size_t i = 0; i < kp.c1.size(); ++i) {
    out << (i ? " " : "") << kp.c1[i].str();
  }
  out << '\n';
  for (std::size_t i = 0; i < kp.c2.size(); ++i) {
    out << (i ? " " : "") << kp.c2[i].str();
  }
  out << '\n';
}

}  // namespace bienum
