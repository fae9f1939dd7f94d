#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sssp/graph.hpp"
#include "sssp/weight.hpp"

namespace sssp {

namespace detail {

// Unbiased draw from [0, bound). mt19937_64 output is fully specified by the
// standard, and this mapping avoids the implementation-defined
// uniform_int_distribution, so generated graphs are identical on every
// platform for a given seed.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t span = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = span - span % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline Weight random_weight(std::mt19937_64& rng) {
  return 1 + uniform_below(rng, 100);  // uniform in [1, 100]
}

}  // namespace detail

// Complete undirected graph: n(n-1)/2 edges, deterministic per seed.
inline EdgeList generate_dense(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_dense: n >= 2");
  std::mt19937_64 rng(seed);
  EdgeList el;
  el.n = n;
  el.edges.reserve(n * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      el.edges.push_back({u, v, detail::random_weight(rng)});
  return el;
}

// Exactly 3n distinct undirected edges: a connecting chain over a shuffled
// vertex order (n-1 edges) plus 2n+1 further distinct random edges. 3n edges
// require 3n <= n(n-1)/2, i.e. n >= 7.
inline EdgeList generate_sparse(std::size_t n, std::uint64_t seed) {
  if (n < 7)
    throw std::invalid_argument("generate_sparse: need n >= 7 for 3n distinct edges");
  std::mt19937_64 rng(seed);
  EdgeList el;
  el.n = n;
  el.edges.reserve(3 * n);

  std::vector<VertexId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n - 1; i > 0; --i) {  // Fisher-Yates
    std::size_t j = detail::uniform_below(rng, i + 1);
    std::swap(order[i], order[j]);
  }

  std::set<std::pair<VertexId, VertexId>> seen;
  auto canonical = [](VertexId a, VertexId b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    seen.insert(canonical(order[i], order[i + 1]));
    el.edges.push_back({order[i], order[i + 1], detail::random_weight(rng)});
  }
  while (el.edges.size() < 3 * n) {
    VertexId u = detail::uniform_below(rng, n);
    VertexId v = detail::uniform_below(rng, n);
    if (u == v || !seen.insert(canonical(u, v)).second) continue;
    el.edges.push_back({u, v, detail::random_weight(rng)});
  }
  return el;
}

}  // namespace sssp
