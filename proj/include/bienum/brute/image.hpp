#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "bienum/bifront.hpp"
#include "bienum/errors.hpp"
#include "bienum/point.hpp"
#include "bienum/problems/graphs.hpp"
#include "bienum/problems/knapsack_gadget.hpp"
#include "bienum/problems/unconstrained.hpp"
#include "bienum/rational.hpp"

namespace bienum {

/// Size ceilings for the exhaustive enumerations below.  They are explicit
/// configuration with safe defaults: exceeding one raises CapacityError,
/// never a silent truncation.
inline constexpr std::size_t kDefaultPathNodeCap = 8;
inline constexpr std::size_t kDefaultTreeNodeCap = 6;
inline constexpr std::size_t kDefaultSubsetCap = 16;

/// Every simple source→target path, mapped to its cost point (multiset:
/// distinct paths with equal costs appear once each).
inline std::vector<Point> enumerate_path_image(
    const CostDigraph& g, std::size_t node_cap = kDefaultPathNodeCap) {
  g.validate();
  if (g.node_count > node_cap) {
    throw CapacityError("digraph exceeds the path-enumeration node cap");
  }
  std::vector<Point> image;
  std::vector<bool> visited(g.node_count, false);
  Rational y1, y2;
  const auto dfs = [&](const auto& self, std::size_t at) -> void {
    if (at == g.target) {
      image.emplace_back(y1, y2);
      return;
    }
    visited[at] = true;
    for (const Arc& arc : g.arcs) {
      if (arc.from != at || visited[arc.to]) {
        continue;
      }
      y1 += arc.cost[0];
      y2 += arc.cost[1];
      self(self, arc.to);
      y1 -= arc.cost[0];
      y2 -= arc.cost[1];
    }
    visited[at] = false;
  };
  dfs(dfs, g.source);
  return image;
}

/// Every spanning tree (edge subsets of size n−1 that connect the graph),
/// mapped to its cost point.
inline std::vector<Point> enumerate_tree_image(
    const CostGraph& g, std::size_t node_cap = kDefaultTreeNodeCap) {
  g.validate();
  if (g.node_count > node_cap) {
    throw CapacityError("graph exceeds the tree-enumeration node cap");
  }
  const std::size_t n = g.node_count;
  const std::size_t m = g.edges.size();
  std::vector<Point> image;
  if (n == 1) {
    image.emplace_back(Rational(0), Rational(0));
    return image;
  }
  if (m >= 64) {
    throw CapacityError("graph exceeds the tree-enumeration edge cap");
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n - 1) {
      continue;
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    bool acyclic = true;
    Rational y1, y2;
    for (std::size_t e = 0; e < m && acyclic; ++e) {
      if (((mask >> e) & 1) == 0) {
        continue;
      }
      const std::size_t a = find(g.edges[e].from);
      const std::size_t b = find(g.edges[e].to);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
      y1 += g.edges[e].cost[0];
      y2 += g.edges[e].cost[1];
    }
    if (acyclic) {
      image.emplace_back(std::move(y1), std::move(y2));
    }
  }
  return image;
}

/// Every proper 2-partition (node 0 pinned to one side), mapped to the sum
/// of crossing edge costs.
inline std::vector<Point> enumerate_cut_image(
    const CostGraph& g, std::size_t node_cap = kDefaultSubsetCap) {
  g.validate();
  if (g.node_count < 2) {
    throw UsageError("cut enumeration needs at least two nodes");
  }
  if (g.node_count > node_cap) {
    throw CapacityError("graph exceeds the cut-enumeration node cap");
  }
  std::vector<Point> image;
  const std::uint64_t limit = std::uint64_t{1} << (g.node_count - 1);
  for (std::uint64_t mask = 0; mask + 1 < limit; ++mask) {
    const auto side = [&](std::size_t v) {
      return v == 0 || ((mask >> (v - 1)) & 1) != 0;
    };
    Rational y1, y2;
    for (const Arc& edge : g.edges) {
      if (side(edge.from) != side(edge.to)) {
        y1 += edge.cost[0];
        y2 += edge.cost[1];
      }
    }
    image.emplace_back(std::move(y1), std::move(y2));
  }
  return image;
}

/// Every x ∈ {0,1}ⁿ of the unconstrained problem, mapped to (cᵀx, −cᵀx).
inline std::vector<Point> enumerate_subset_image(
    const UnconstrainedBi& instance, std::size_t n_cap = kDefaultSubsetCap) {
  instance.validate();
  const std::size_t n = instance.c.size();
  if (n > n_cap) {
    throw CapacityError("subset enumeration exceeds the coefficient cap");
  }
  std::vector<Point> image;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Int sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1) {
        sum += instance.c[i];
      }
    }
    image.emplace_back(Rational(sum), Rational(-sum));
  }
  return image;
}

/// Pareto front of an explicit image (reference for full-front enumerators).
inline BiFront brute_front(const std::vector<Point>& image) {
  BiFront front;
  for (const Point& p : pareto_filter(image)) {
    front.insert(p);
  }
  return front;
}

/// Nondominated extreme points of an explicit image (reference for the
/// dichotomic enumerators).
inline BiFront brute_extremes(const std::vector<Point>& image) {
  return hull_extremes_2d(image);
}

/// Exhaustive knapsack feasibility: does any x ∈ {0,1}ⁿ satisfy c¹ᵀx ≤ k₁
/// and c²ᵀx ≥ k₂?  Ground truth for the reduction's soundness check.
inline bool brute_knapsack_feasible(const KPInstance& kp,
                                    std::size_t n_cap = kDefaultSubsetCap) {
  kp.validate();
  const std::size_t n = kp.c1.size();
  if (n > n_cap) {
    throw CapacityError("knapsack enumeration exceeds the item cap");
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Int load = 0, cover = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1) {
        load += kp.c1[i];
        cover += kp.c2[i];
      }
    }
    if (load <= kp.k1 && cover >= kp.k2) {
      return true;
    }
  }
  return false;
}

}  // namespace bienum
