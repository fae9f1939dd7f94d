#pragma once

#include <cstddef>
#include <vector>

#include "sssp/weight.hpp"

namespace sssp {

// Single-source distances plus the shortest-path tree. pred[v] is kNoVertex
// for the source and for unreachable vertices; for every other reachable v
// the parent edge is tight: dist[pred[v]] + w(pred[v], v) == dist[v].
struct ShortestPathResult {
  VertexId source = 0;
  std::vector<Weight> dist;
  std::vector<VertexId> pred;

  bool operator==(const ShortestPathResult&) const = default;
};

}  // namespace sssp
