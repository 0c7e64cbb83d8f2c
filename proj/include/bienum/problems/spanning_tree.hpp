#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "bienum/errors.hpp"
#include "bienum/oracle.hpp"
#include "bienum/point.hpp"
#include "bienum/problems/graphs.hpp"
#include "bienum/rational.hpp"

namespace bienum {

/// Scalarization oracle for biobjective spanning trees.  Both query modes
/// are greedy (Kruskal) runs: the matroid exchange argument makes greedy
/// optimal for any totally ordered edge key, so scalarized keys give the
/// weighted-sum optimum and (ℓᵀc, c₁, c₂) keys give the lexicographic one.
class SpanningTreeOracle : public ScalarizationOracle {
 public:
  explicit SpanningTreeOracle(CostGraph graph) : graph_(std::move(graph)) {
    graph_.validate();
  }

  const CostGraph& graph() const { return graph_; }

 protected:
  OracleAnswer do_weighted_sum(const Weight& w) override {
    return greedy(w, false);
  }

  OracleAnswer do_lex_weighted_sum(const Weight& w) override {
    return greedy(w, true);
  }

 private:
  OracleAnswer greedy(const Weight& w, bool lexicographic) const {
    std::vector<std::size_t> order(graph_.edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto key_less = [&](std::size_t a, std::size_t b) {
      const Point& ca = graph_.edges[a].cost;
      const Point& cb = graph_.edges[b].cost;
      const Rational wa = weighted_value(w, ca);
      const Rational wb = weighted_value(w, cb);
      if (wa != wb) {
        return wa < wb;
      }
      if (lexicographic && ca != cb) {
        return lex_less(ca, cb);
      }
      return a < b;  // stable, deterministic tie-break
    };
    std::stable_sort(order.begin(), order.end(), key_less);

    std::vector<std::size_t> parent(graph_.node_count);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };

    Solution solution;
    solution.select.assign(graph_.edges.size(), 0);
    Rational y1, y2;
    std::size_t chosen = 0;
    for (const std::size_t e : order) {
      const Arc& edge = graph_.edges[e];
      const std::size_t a = find(edge.from);
      const std::size_t b = find(edge.to);
      if (a == b) {
        continue;
      }
      parent[a] = b;
      solution.select[e] = 1;
      y1 += edge.cost[0];
      y2 += edge.cost[1];
      ++chosen;
    }
    if (chosen + 1 != graph_.node_count) {
      return OracleAnswer::infeasible();  // disconnected: no spanning tree
    }
    return OracleAnswer::optimal(Point(y1, y2), std::move(solution));
  }

  CostGraph graph_;
};

}  // namespace bienum
