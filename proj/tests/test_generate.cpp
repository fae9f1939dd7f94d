#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>
#include <vector>

#include "sssp/generate.hpp"
#include "sssp/graph.hpp"

using namespace sssp;

TEST_CASE("dense generator emits the complete graph") {
  REQUIRE(generate_dense(10, 1).edges.size() == 45);
  REQUIRE(generate_dense(100, 1).edges.size() == 4950);
  REQUIRE(generate_dense(1000, 1).edges.size() == 499500);
  REQUIRE(generate_dense(2, 1).edges.size() == 1);
  REQUIRE_THROWS_AS(generate_dense(1, 1), std::invalid_argument);
}

TEST_CASE("sparse generator emits exactly 3n distinct edges") {
  for (std::size_t n : {7ul, 100ul, 1000ul}) {
    const EdgeList el = generate_sparse(n, 42);
    REQUIRE(el.edges.size() == 3 * n);
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : el.edges) {
      REQUIRE(e.u != e.v);
      REQUIRE(e.u < n);
      REQUIRE(e.v < n);
      REQUIRE(e.w >= 1);
      REQUIRE(e.w <= 100);
      auto key = e.u < e.v ? std::make_pair(e.u, e.v) : std::make_pair(e.v, e.u);
      REQUIRE(seen.insert(key).second);  // no duplicates
    }
  }
}

TEST_CASE("sparse generator needs room for 3n distinct edges") {
  for (std::size_t n : {1ul, 4ul, 5ul, 6ul})
    REQUIRE_THROWS_AS(generate_sparse(n, 1), std::invalid_argument);
  REQUIRE_NOTHROW(generate_sparse(7, 1));  // 3n == n(n-1)/2 boundary
}

TEST_CASE("sparse graphs are connected") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const EdgeList el = generate_sparse(64, seed);
    const Graph g = graph_from_edges(el, false);
    std::vector<char> seen(g.n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v = 0; v < g.n; ++v)
        if (u != v && g.at(u, v) != kInfinity && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    for (char s : seen) REQUIRE(s == 1);
  }
}

TEST_CASE("large sparse scale matches the node:edge ratio") {
  REQUIRE(generate_sparse(10000, 5).edges.size() == 30000);
}

TEST_CASE("generators are deterministic per seed") {
  auto serialize = [](const EdgeList& el) {
    std::ostringstream out;
    write_edge_list(el, out);
    return out.str();
  };
  REQUIRE(serialize(generate_dense(50, 9)) == serialize(generate_dense(50, 9)));
  REQUIRE(serialize(generate_sparse(50, 9)) == serialize(generate_sparse(50, 9)));
  REQUIRE(serialize(generate_sparse(50, 9)) != serialize(generate_sparse(50, 10)));
}

TEST_CASE("dense weights stay in the generator range") {
  for (const Edge& e : generate_dense(30, 3).edges) {
    REQUIRE(e.w >= 1);
    REQUIRE(e.w <= 100);
  }
}
