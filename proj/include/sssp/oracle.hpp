#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sssp/graph.hpp"
#include "sssp/result.hpp"
#include "sssp/weight.hpp"

namespace sssp {

// All-pairs shortest distances, row u = distances from source u.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<Weight> d;

  Weight at(VertexId u, VertexId v) const { return d[u * n + v]; }
};

inline constexpr std::size_t kOracleVertexLimit = 500;

// Brute-force referee for every engine: dynamic programming over admitted
// intermediate vertices (Floyd-Warshall triple loop). Deliberately naive and
// deliberately independent of the Dijkstra implementations.
inline DistanceMatrix all_pairs_bruteforce(const Graph& g,
                                           std::size_t limit = kOracleVertexLimit) {
  if (g.n > limit)
    throw std::invalid_argument("all_pairs_bruteforce: graph exceeds oracle limit");
  DistanceMatrix m;
  m.n = g.n;
  m.d = g.adj;
  const std::size_t n = g.n;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const Weight d_ik = m.d[i * n + k];
      if (d_ik == kInfinity) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Weight d_kj = m.d[k * n + j];
        if (d_kj == kInfinity) continue;
        if (d_ik + d_kj < m.d[i * n + j]) m.d[i * n + j] = d_ik + d_kj;
      }
    }
  return m;
}

// Checks every ShortestPathResult invariant against the graph. Violations are
// data, not errors: an empty list means the result is a valid shortest-path
// tree with fixpoint distances.
inline std::vector<std::string> validate_result(const Graph& g,
                                                const ShortestPathResult& r) {
  std::vector<std::string> violations;
  const std::size_t n = g.n;
  if (r.dist.size() != n || r.pred.size() != n) {
    violations.push_back("result arrays sized " + std::to_string(r.dist.size()) +
                         "/" + std::to_string(r.pred.size()) + ", expected " +
                         std::to_string(n));
    return violations;
  }
  if (r.source >= n) {
    violations.push_back("source " + std::to_string(r.source) + " out of range");
    return violations;
  }
  if (r.dist[r.source] != 0)
    violations.push_back("source distance nonzero");
  if (r.pred[r.source] != kNoVertex)
    violations.push_back("source has a predecessor");

  // Relaxation fixpoint over every finite edge.
  for (VertexId u = 0; u < n; ++u) {
    if (r.dist[u] == kInfinity) continue;
    for (VertexId v = 0; v < n; ++v) {
      const Weight w = g.at(u, v);
      if (w == kInfinity) continue;
      if (r.dist[u] + w < r.dist[v])
        violations.push_back("edge " + std::to_string(u) + "->" +
                             std::to_string(v) + " relaxable: dist not a fixpoint");
    }
  }

  // Parent edges exist and are tight.
  for (VertexId v = 0; v < n; ++v) {
    if (v == r.source) continue;
    if (r.dist[v] == kInfinity) {
      if (r.pred[v] != kNoVertex)
        violations.push_back("unreachable vertex " + std::to_string(v) +
                             " has a predecessor");
      continue;
    }
    const VertexId u = r.pred[v];
    if (u == kNoVertex || u >= n) {
      violations.push_back("reachable vertex " + std::to_string(v) +
                           " lacks a valid predecessor");
      continue;
    }
    const Weight w = g.at(u, v);
    if (w == kInfinity)
      violations.push_back("pred edge " + std::to_string(u) + "->" +
                           std::to_string(v) + " missing from graph");
    else if (add_weight(r.dist[u], w) != r.dist[v])
      violations.push_back("pred edge " + std::to_string(u) + "->" +
                           std::to_string(v) + " not tight");
  }

  // Predecessor chains reach the source without cycling.
  for (VertexId v = 0; v < n; ++v) {
    if (v == r.source || r.dist[v] == kInfinity) continue;
    VertexId cur = v;
    std::size_t hops = 0;
    while (cur != r.source && cur != kNoVertex && cur < n && hops <= n) {
      cur = r.pred[cur];
      ++hops;
    }
    if (cur != r.source)
      violations.push_back("pred chain from vertex " + std::to_string(v) +
                           " does not terminate at source");
  }
  return violations;
}

}  // namespace sssp
