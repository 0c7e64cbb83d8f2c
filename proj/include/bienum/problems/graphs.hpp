#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "bienum/errors.hpp"
#include "bienum/point.hpp"
#include "bienum/rational.hpp"

namespace bienum {

/// One arc (directed) or edge (undirected) with a biobjective cost.
struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  Point cost;
};

namespace detail {

inline void require_arc(const Arc& arc, std::size_t node_count,
                        bool allow_loop) {
  if (arc.from >= node_count || arc.to >= node_count) {
    throw UsageError("arc endpoint out of range");
  }
  if (!allow_loop && arc.from == arc.to) {
    throw UsageError("self-loops are not allowed here");
  }
  if (arc.cost.dimension() != 2 || arc.cost[0] < 0 || arc.cost[1] < 0) {
    throw UsageError("arc costs must be two-dimensional and nonnegative");
  }
}

}  // namespace detail

/// Directed graph with designated terminals for shortest-path problems.
struct CostDigraph {
  std::size_t node_count = 0;
  std::vector<Arc> arcs;
  std::size_t source = 0;
  std::size_t target = 0;

  void validate() const {
    if (node_count < 2) {
      throw UsageError("digraph needs at least the two terminals");
    }
    if (source >= node_count || target >= node_count || source == target) {
      throw UsageError("terminals must be distinct in-range nodes");
    }
    for (const Arc& arc : arcs) {
      detail::require_arc(arc, node_count, /*allow_loop=*/true);
    }
  }
};

/// Undirected graph for spanning-tree and global min-cut problems.
struct CostGraph {
  std::size_t node_count = 0;
  std::vector<Arc> edges;

  void validate() const {
    if (node_count == 0) {
      throw UsageError("graph needs at least one node");
    }
    for (const Arc& edge : edges) {
      detail::require_arc(edge, node_count, /*allow_loop=*/false);
    }
  }

  /// Union-find connectivity test, used by oracle preconditions.
  bool connected() const {
    std::vector<std::size_t> parent(node_count);
    for (std::size_t v = 0; v < node_count; ++v) {
      parent[v] = v;
    }
    const auto find = [&](std::size_t v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    std::size_t components = node_count;
    for (const Arc& edge : edges) {
      const std::size_t a = find(edge.from);
      const std::size_t b = find(edge.to);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    return components == 1;
  }
};

using GraphInstance = std::variant<CostDigraph, CostGraph>;

/// Parses the graph file format: header "directed n m s t" or
/// "undirected n m", then m lines "u v cost₁ cost₂" with 0-based node ids
/// and rational cost components.
inline GraphInstance parse_graph(std::istream& in) {
  std::string kind;
  if (!(in >> kind)) {
    throw UsageError("empty graph file");
  }
  const bool directed = kind == "directed";
  if (!directed && kind != "undirected") {
    throw UsageError("graph header must start with 'directed' or 'undirected'");
  }
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw UsageError("graph header needs nonnegative node and edge counts");
  }
  long long s = 0, t = 0;
  if (directed && !(in >> s >> t)) {
    throw UsageError("directed graph header needs source and target ids");
  }
  std::vector<Arc> arcs;
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    std::string c1, c2;
    if (!(in >> u >> v >> c1 >> c2)) {
      throw UsageError("graph file ended inside the arc list");
    }
    if (u < 0 || v < 0) {
      throw UsageError("node ids must be nonnegative");
    }
    arcs.push_back(Arc{static_cast<std::size_t>(u), static_cast<std::size_t>(v),
                       Point(parse_rational(c1), parse_rational(c2))});
  }
  std::string extra;
  if (in >> extra) {
    throw UsageError("trailing content in graph file: '" + extra + "'");
  }
  if (directed) {
    if (s < 0 || t < 0) {
      throw UsageError("terminal ids must be nonnegative");
    }
    CostDigraph g{static_cast<std::size_t>(n), std::move(arcs),
                  static_cast<std::size_t>(s), static_cast<std::size_t>(t)};
    g.validate();
    return g;
  }
  CostGraph g{static_cast<std::size_t>(n), std::move(arcs)};
  g.validate();
  return g;
}

inline void write_graph(std::ostream& out, const CostDigraph& g) {
  out << "directed " << g.node_count << ' ' << g.arcs.size() << ' ' << g.source
      << ' ' << g.target << '\n';
  for (const Arc& arc : g.arcs) {
    out << arc.from << ' ' << arc.to << ' ' << format_rational(arc.cost[0])
        << ' ' << format_rational(arc.cost[1]) << '\n';
  }
}

inline void write_graph(std::ostream& out, const CostGraph& g) {
  out << "undirected " << g.node_count << ' ' << g.edges.size() << '\n';
  for (const Arc& edge : g.edges) {
    out << edge.from << ' ' << edge.to << ' ' << format_rational(edge.cost[0])
        << ' ' << format_rational(edge.cost[1]) << '\n';
  }
}

}  // namespace bienum
