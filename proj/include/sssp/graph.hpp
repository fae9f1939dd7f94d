#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sssp/weight.hpp"

namespace sssp {

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight w = 0;
};

// Raw edge list as read from disk or produced by a generator. Vertex ids are
// 0-based; directedness is not a property of the list, it is chosen when the
// adjacency matrix is built.
struct EdgeList {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

// Dense adjacency matrix. adj is row-major n*n: adj[u*n + v] is the weight of
// edge u->v, kInfinity if absent, 0 on the diagonal. Undirected graphs keep
// the matrix symmetric. Treated as immutable once built.
struct Graph {
  std::size_t n = 0;
  bool directed = false;
  std::vector<Weight> adj;

  static Graph no_edges(std::size_t n, bool directed) {
    Graph g;
    g.n = n;
    g.directed = directed;
    g.adj.assign(n * n, kInfinity);
    for (std::size_t i = 0; i < n; ++i) g.adj[i * n + i] = 0;
    return g;
  }

  Weight at(VertexId u, VertexId v) const { return adj[u * n + v]; }
  Weight& at(VertexId u, VertexId v) { return adj[u * n + v]; }

  // Finite off-diagonal entries; each undirected edge counted once.
  std::size_t edge_count() const {
    std::size_t cells = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v && adj[u * n + v] != kInfinity) ++cells;
    return directed ? cells : cells / 2;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Builds the matrix from an edge list. Duplicate edges keep the minimum
// weight so the result does not depend on input order.
inline Graph graph_from_edges(const EdgeList& el, bool directed) {
  Graph g = Graph::no_edges(el.n, directed);
  for (const Edge& e : el.edges) {
    if (e.u >= el.n || e.v >= el.n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (e.w > kMaxWeight) throw std::invalid_argument("weight out of range");
    Weight& cell = g.at(e.u, e.v);
    if (e.w < cell) cell = e.w;
    if (!directed) {
      Weight& mirror = g.at(e.v, e.u);
      if (e.w < mirror) mirror = e.w;
    }
  }
  return g;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_int(std::string_view tok, std::size_t line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return value;
}

}  // namespace detail

// Text format:
//   line 1:        <n> <m>
//   lines 2..m+1:  <u> <v> <w>
// '#'-prefixed lines and blank lines are ignored; CRLF tolerated.
inline EdgeList parse_edge_list_text(std::istream& in) {
  EdgeList el;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t expected_edges = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = detail::split_fields(line);
    if (!header_seen) {
      if (fields.size() != 2)
        throw ParseError(line_no, "expected header '<n> <m>'");
      long long n = detail::parse_int(fields[0], line_no, "vertex count");
      long long m = detail::parse_int(fields[1], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative header value");
      el.n = static_cast<std::size_t>(n);
      expected_edges = static_cast<std::size_t>(m);
      header_seen = true;
      continue;
    }
    if (fields.size() != 3)
      throw ParseError(line_no, "expected '<u> <v> <w>'");
    long long u = detail::parse_int(fields[0], line_no, "vertex id");
    long long v = detail::parse_int(fields[1], line_no, "vertex id");
    long long w = detail::parse_int(fields[2], line_no, "weight");
    if (u < 0 || v < 0 || u >= static_cast<long long>(el.n) ||
        v >= static_cast<long long>(el.n))
      throw ParseError(line_no, "vertex id out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    if (w < 0) throw ParseError(line_no, "negative weight");
    if (static_cast<Weight>(w) > kMaxWeight)
      throw ParseError(line_no, "weight out of range");
    if (el.edges.size() == expected_edges)
      throw ParseError(line_no, "more edges than declared in header");
    el.edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v),
                        static_cast<Weight>(w)});
  }
  if (!header_seen) throw ParseError(line_no, "missing header");
  if (el.edges.size() != expected_edges)
    throw ParseError(line_no, "expected " + std::to_string(expected_edges) +
                                  " edges, found " + std::to_string(el.edges.size()));
  return el;
}

inline Graph parse_edge_list(std::istream& in, bool directed) {
  return graph_from_edges(parse_edge_list_text(in), directed);
}

// Canonical serialization of an edge list (the same format the parser reads).
inline void write_edge_list(const EdgeList& el, std::ostream& out) {
  out << el.n << ' ' << el.edges.size() << '\n';
  for (const Edge& e : el.edges) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

}  // namespace sssp
