#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bienum/errors.hpp"
#include "bienum/oracle.hpp"
#include "bienum/point.hpp"
#include "bienum/problems/graphs.hpp"
#include "bienum/rational.hpp"

namespace bienum {

namespace detail {

/// Label of the lexicographic shortest-path relaxation: scalarized value
/// first, then the raw objectives as tie-breakers.  Componentwise addition
/// and lexicographic comparison form the ordered semiring the label-setting
/// argument needs; nonnegative arc costs keep the greedy invariant valid.
struct PathLabel {
  Rational weighted;
  Rational y1;
  Rational y2;

  friend bool operator<(const PathLabel& a, const PathLabel& b) {
    if (a.weighted != b.weighted) {
      return a.weighted < b.weighted;
    }
    if (a.y1 != b.y1) {
      return a.y1 < b.y1;
    }
    return a.y2 < b.y2;
  }
};

}  // namespace detail

/// Scalarization oracle for biobjective shortest s-t paths.  Weighted-sum
/// queries run Dijkstra on the scalarized costs; lexicographic queries run
/// the same label-setting over (ℓᵀc, c₁, c₂) triples.  ε-constraint queries
/// are not offered — constrained shortest path is a different (hard)
/// problem served by the brute-force module at test scale.
class ShortestPathOracle : public ScalarizationOracle {
 public:
  explicit ShortestPathOracle(CostDigraph graph) : graph_(std::move(graph)) {
    graph_.validate();
  }

  const CostDigraph& graph() const { return graph_; }

 protected:
  OracleAnswer do_weighted_sum(const Weight& w) override { return solve(w, false); }

  OracleAnswer do_lex_weighted_sum(const Weight& w) override {
    return solve(w, true);
  }

 private:
  /// Label-setting shortest path.  With `lexicographic` the full triple
  /// orders the labels; otherwise ties beyond the scalarized value are
  /// broken by node id inside the extraction loop, which keeps plain
  /// weighted-sum answers deterministic without promising lex-minimality.
  OracleAnswer solve(const Weight& w, bool lexicographic) const {
    const std::size_t n = graph_.node_count;
    std::vector<std::optional<detail::PathLabel>> dist(n);
    std::vector<std::optional<std::size_t>> via_arc(n);
    std::vector<bool> done(n, false);
    dist[graph_.source] = detail::PathLabel{Rational(0), Rational(0), Rational(0)};

    for (;;) {
      std::optional<std::size_t> pick;
      for (std::size_t v = 0; v < n; ++v) {
        if (done[v] || !dist[v]) {
          continue;
        }
        if (!pick || *dist[v] < *dist[*pick]) {
          pick = v;
        }
      }
      if (!pick) {
        break;
      }
      done[*pick] = true;
      for (std::size_t a = 0; a < graph_.arcs.size(); ++a) {
        const Arc& arc = graph_.arcs[a];
        if (arc.from != *pick) {
          continue;
        }
        detail::PathLabel candidate{
            dist[*pick]->weighted + weighted_value(w, arc.cost),
            dist[*pick]->y1 + arc.cost[0], dist[*pick]->y2 + arc.cost[1]};
        if (!lexicographic) {
          // Only the scalarized component participates in the order; zero
          // the tie-breakers so label comparisons reduce to it.
          candidate.y1 = candidate.y2 = 0;
        }
        if (!dist[arc.to] || candidate < *dist[arc.to]) {
          dist[arc.to] = std::move(candidate);
          via_arc[arc.to] = a;
        }
      }
    }

    if (!dist[graph_.target]) {
      return OracleAnswer::infeasible();
    }
    Solution solution;
    solution.select.assign(graph_.arcs.size(), 0);
    Rational y1, y2;
    for (std::size_t v = graph_.target; v != graph_.source;) {
      const std::size_t a = *via_arc[v];
      solution.select[a] = 1;
      y1 += graph_.arcs[a].cost[0];
      y2 += graph_.arcs[a].cost[1];
      v = graph_.arcs[a].from;
    }
    return OracleAnswer::optimal(Point(y1, y2), std::move(solution));
  }

  CostDigraph graph_;
};

}  // namespace bienum
