#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sssp/graph.hpp"
#include "sssp/result.hpp"
#include "sssp/weight.hpp"

namespace sssp {

// Instrumentation for the matrix-scan baseline. Both counters land on exactly
// n*n for an n-vertex run: every round reads all n distance entries to pick
// the minimum and examines all n columns of the elected row, reachable or not.
struct OpCounters {
  std::size_t extract_min_scans = 0;
  std::size_t relax_checks = 0;
};

// Baseline O(n^2) Dijkstra over the adjacency matrix. Runs exactly n rounds;
// ties in the minimum selection go to the lowest vertex id, and vertices left
// at kInfinity still get elected in late rounds (their relaxations are no-ops
// behind the INF guard). visit_order, when given, receives the elected vertex
// of each round.
inline ShortestPathResult dijkstra_serial(const Graph& g, VertexId source,
                                          OpCounters& counters,
                                          std::vector<VertexId>* visit_order = nullptr) {
  const std::size_t n = g.n;
  if (source >= n) throw std::invalid_argument("dijkstra_serial: source out of range");

  ShortestPathResult r;
  r.source = source;
  r.dist.assign(n, kInfinity);
  r.pred.assign(n, kNoVertex);
  r.dist[source] = 0;
  std::vector<char> visited(n, 0);
  counters = {};
  if (visit_order) visit_order->clear();

  for (std::size_t round = 0; round < n; ++round) {
    VertexId u = kNoVertex;
    for (VertexId v = 0; v < n; ++v) {
      ++counters.extract_min_scans;
      const Weight d = r.dist[v];
      if (!visited[v] && (u == kNoVertex || d < r.dist[u])) u = v;
    }
    visited[u] = 1;
    if (visit_order) visit_order->push_back(u);

    const Weight du = r.dist[u];
    const Weight* row = g.adj.data() + u * n;
    for (VertexId v = 0; v < n; ++v) {
      ++counters.relax_checks;
      const Weight w = row[v];
      if (!visited[v] && w != kInfinity && du != kInfinity && du + w < r.dist[v]) {
        r.dist[v] = du + w;
        r.pred[v] = u;
      }
    }
  }
  return r;
}

inline ShortestPathResult dijkstra_serial(const Graph& g, VertexId source) {
  OpCounters counters;
  return dijkstra_serial(g, source, counters);
}

}  // namespace sssp
