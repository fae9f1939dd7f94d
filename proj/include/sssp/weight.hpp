#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

namespace sssp {

using Weight = std::uint64_t;
using VertexId = std::size_t;

// Missing edge / unreachable distance.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

// Largest edge weight a graph may carry. Any path distance is a sum of at
// most n-1 weights, and n*n matrix cells must fit in memory, so finite
// distances stay far below kInfinity and dist + w never wraps.
inline constexpr Weight kMaxWeight = std::numeric_limits<std::uint32_t>::max();

// Sentinel for "no predecessor" / "no vertex elected".
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Guarded addition: arithmetic is never performed on the sentinel.
inline constexpr Weight add_weight(Weight a, Weight b) {
  return (a == kInfinity || b == kInfinity) ? kInfinity : a + b;
}

}  // namespace sssp
