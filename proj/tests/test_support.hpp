#pragma once

#include <cstdint>
#include <random>

#include "sssp/generate.hpp"
#include "sssp/graph.hpp"

namespace test_support {

// The worked 4-vertex example graph: edges (0,1,2) (0,2,4) (1,2,1) (1,3,3)
// (2,3,5). Undirected it yields the symmetric matrix with row 0 =
// [0,2,4,inf]; directed it is upper triangular.
inline sssp::EdgeList four_vertex_edges() {
  sssp::EdgeList el;
  el.n = 4;
  el.edges = {{0, 1, 2}, {0, 2, 4}, {1, 2, 1}, {1, 3, 3}, {2, 3, 5}};
  return el;
}

inline sssp::Graph four_vertex_undirected() {
  return sssp::graph_from_edges(four_vertex_edges(), false);
}

inline sssp::Graph four_vertex_directed() {
  return sssp::graph_from_edges(four_vertex_edges(), true);
}

struct RandomGraphOptions {
  bool dense = false;
  bool directed = false;
  std::size_t min_n = 7;
  std::size_t max_n = 120;
};

inline sssp::Graph random_graph(std::mt19937_64& rng, const RandomGraphOptions& opt) {
  const std::size_t span = opt.max_n - opt.min_n + 1;
  const std::size_t n = opt.min_n + static_cast<std::size_t>(rng() % span);
  const std::uint64_t seed = rng();
  const sssp::EdgeList el =
      opt.dense ? sssp::generate_dense(n, seed) : sssp::generate_sparse(n, seed);
  return sssp::graph_from_edges(el, opt.directed);
}

}  // namespace test_support
