#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sssp/graph.hpp"
#include "sssp/weight.hpp"

namespace sssp {

// 1D column decomposition of a (padded) adjacency matrix: worker k owns the
// contiguous column interval ranges[k] = [k*loc_n, (k+1)*loc_n).
struct PartitionPlan {
  std::size_t n = 0;         // original vertex count
  std::size_t p = 0;         // worker count
  std::size_t padded_n = 0;  // multiple of p, >= max(n, p)
  std::size_t loc_n = 0;     // padded_n / p
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
};

// Smallest padded vertex count: procs itself when procs > n, otherwise n
// rounded up to the next multiple of procs.
inline std::size_t pad_vertex_count(std::size_t n, std::size_t p) {
  if (n < 1 || p < 1) throw std::invalid_argument("pad_vertex_count: n, p >= 1");
  if (p > n) return p;
  return n + (p - n % p) % p;
}

inline PartitionPlan make_partition_plan(std::size_t n, std::size_t p) {
  PartitionPlan plan;
  plan.n = n;
  plan.p = p;
  plan.padded_n = pad_vertex_count(n, p);
  plan.loc_n = plan.padded_n / p;
  plan.ranges.reserve(p);
  for (std::size_t k = 0; k < p; ++k)
    plan.ranges.emplace_back(k * plan.loc_n, (k + 1) * plan.loc_n);
  return plan;
}

// Grows the matrix to padded_n x padded_n. Padding vertices are isolated:
// every added off-diagonal cell is kInfinity, added diagonal cells are 0, so
// they stay unreachable from any real source.
inline Graph pad_graph(const Graph& g, std::size_t padded_n) {
  if (padded_n < g.n) throw std::invalid_argument("pad_graph: padded_n < n");
  if (padded_n == g.n) return g;
  Graph padded = Graph::no_edges(padded_n, g.directed);
  for (std::size_t u = 0; u < g.n; ++u)
    for (std::size_t v = 0; v < g.n; ++v)
      padded.adj[u * padded_n + v] = g.adj[u * g.n + v];
  return padded;
}

}  // namespace sssp
