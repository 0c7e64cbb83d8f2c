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

/// Default ceiling on min-cut instance size; 2^{n−1} − 1 cuts are scanned
/// per query, so the cap keeps a single call comfortably interactive.
inline constexpr std::size_t kDefaultCutNodeCap = 16;

/// Scalarization oracle for the biobjective global minimum cut, answering
/// every query mode by exhaustively scanning all proper 2-partitions.  A
/// polynomial cut oracle exists, but at test scale exhaustive scanning is
/// the ground truth the enumerators are validated against, so it serves as
/// the oracle itself here.
class MinCutOracle : public ScalarizationOracle {
 public:
  explicit MinCutOracle(CostGraph graph, std::size_t node_cap = kDefaultCutNodeCap)
      : graph_(std::move(graph)) {
    graph_.validate();
    if (graph_.node_count < 2) {
      throw UsageError("min cut needs at least two nodes");
    }
    if (graph_.node_count > node_cap) {
      throw CapacityError("min-cut node count exceeds the enumeration cap");
    }
    if (!graph_.connected()) {
      throw UsageError("min cut requires a connected graph");
    }
  }

  const CostGraph& graph() const { return graph_; }

 protected:
  OracleAnswer do_weighted_sum(const Weight& w) override {
    return scan([&](const Point& candidate, const Point& best) {
      const Rational cv = weighted_value(w, candidate);
      const Rational bv = weighted_value(w, best);
      if (cv != bv) {
        return cv < bv;
      }
      return lex_less(candidate, best);
    });
  }

  OracleAnswer do_lex_weighted_sum(const Weight& w) override {
    return do_weighted_sum(w);  // the scan already tie-breaks lexicographically
  }

  OracleAnswer do_eps_constraint(const ObjectiveBound& bound) override {
    return scan(
        [](const Point& candidate, const Point& best) {
          if (candidate[1] != best[1]) {
            return candidate[1] < best[1];
          }
          return lex_less(candidate, best);
        },
        &bound);
  }

 private:
  /// Visits every proper 2-partition once (node 0 pinned to one side) and
  /// keeps the scan-best cut under `better`, optionally filtered by an
  /// objective-1 bound.
  template <typename Better>
  OracleAnswer scan(const Better& better,
                    const ObjectiveBound* bound = nullptr) const {
    const std::size_t n = graph_.node_count;
    std::optional<Point> best;
    std::uint64_t best_mask = 0;
    const std::uint64_t limit = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask + 1 < limit; ++mask) {
      Rational y1, y2;
      for (const Arc& edge : graph_.edges) {
        if (side(mask, edge.from) != side(mask, edge.to)) {
          y1 += edge.cost[0];
          y2 += edge.cost[1];
        }
      }
      Point candidate(std::move(y1), std::move(y2));
      if (bound && !bound->admits(candidate[0])) {
        continue;
      }
      if (!best || better(candidate, *best)) {
        best = std::move(candidate);
        best_mask = mask;
      }
    }
    if (!best) {
      return OracleAnswer::infeasible();  // every cut violates the bound
    }
    Solution solution;
    solution.select.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      solution.select[v] = side(best_mask, v) ? 1 : 0;
    }
    return OracleAnswer::optimal(std::move(*best), std::move(solution));
  }

  /// Node 0 is always on side 1; bit i−1 of the mask places node i.
  static bool side(std::uint64_t mask, std::size_t node) {
    if (node == 0) {
      return true;
    }
    return ((mask >> (node - 1)) & 1) != 0;
  }

  CostGraph graph_;
};

}  // namespace bienum
