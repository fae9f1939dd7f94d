#pragma once

#include <array>
#include <barrier>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sssp/graph.hpp"
#include "sssp/partition.hpp"
#include "sssp/result.hpp"
#include "sssp/timing.hpp"
#include "sssp/weight.hpp"

namespace sssp {

// Candidate for the min-with-index reduction. Ordering is lexicographic on
// (dist, vertex), so the reduction has one deterministic winner under ties.
struct MinLocPair {
  Weight dist = kInfinity;
  VertexId vertex = 0;

  auto operator<=>(const MinLocPair&) const = default;
};

struct CollectiveStats {
  std::size_t allreduce_count = 0;
  std::size_t scatter_bytes = 0;
  std::size_t gather_bytes = 0;
};

// Worker-local slice of the padded matrix: all rows of the owned columns,
// plus the owned slices of the distance/predecessor/visited arrays. A block
// is touched only by its owning worker; workers communicate exclusively
// through the collective operations below.
struct ColumnBlock {
  std::size_t owner = 0;
  std::size_t col_begin = 0;
  std::size_t col_end = 0;  // global half-open column interval
  std::size_t padded_n = 0;
  std::vector<Weight> adj_block;  // padded_n rows x loc_n owned columns
  std::vector<Weight> loc_dist;
  std::vector<VertexId> loc_pred;
  std::vector<char> loc_visited;

  std::size_t loc_n() const { return col_end - col_begin; }
};

// Distributes the padded matrix column-wise, one block per worker. Worker 0's
// block is a direct copy like the rest; the rank-0 special case in a real
// message-passing transport is not observable in-process.
inline std::vector<ColumnBlock> scatter_columns(const Graph& g,
                                                const PartitionPlan& plan) {
  if (plan.n != g.n)
    throw std::invalid_argument("scatter_columns: plan built for a different graph");
  const Graph padded = pad_graph(g, plan.padded_n);
  std::vector<ColumnBlock> blocks(plan.p);
  for (std::size_t k = 0; k < plan.p; ++k) {
    ColumnBlock& b = blocks[k];
    b.owner = k;
    b.col_begin = plan.ranges[k].first;
    b.col_end = plan.ranges[k].second;
    b.padded_n = plan.padded_n;
    const std::size_t loc_n = b.loc_n();
    b.adj_block.resize(plan.padded_n * loc_n);
    for (std::size_t u = 0; u < plan.padded_n; ++u)
      for (std::size_t j = 0; j < loc_n; ++j)
        b.adj_block[u * loc_n + j] = padded.adj[u * plan.padded_n + b.col_begin + j];
    b.loc_dist.assign(loc_n, kInfinity);
    b.loc_pred.assign(loc_n, kNoVertex);
    b.loc_visited.assign(loc_n, 0);
  }
  return blocks;
}

// Lexicographically smallest (dist, global vertex) over the block's unvisited
// finite columns. (kInfinity, padded_n) when the block is exhausted; that
// sentinel loses the reduction to any live candidate.
inline MinLocPair local_min(const ColumnBlock& b) {
  MinLocPair best{kInfinity, b.padded_n};
  const std::size_t loc_n = b.loc_n();
  for (std::size_t j = 0; j < loc_n; ++j) {
    if (b.loc_visited[j] || b.loc_dist[j] == kInfinity) continue;
    const MinLocPair cand{b.loc_dist[j], b.col_begin + j};
    if (cand < best) best = cand;
  }
  return best;
}

// Collective contract: every worker contributes one candidate and every
// worker observes the same lexicographic minimum.
inline MinLocPair allreduce_minloc(const std::vector<MinLocPair>& candidates) {
  if (candidates.empty())
    throw std::invalid_argument("allreduce_minloc: no candidates");
  MinLocPair best = candidates[0];
  for (std::size_t k = 1; k < candidates.size(); ++k)
    if (candidates[k] < best) best = candidates[k];
  return best;
}

// One round of updates after vertex u was elected globally with distance
// dist_u. The owner of u flips its visited flag whether or not anything
// relaxes; relaxation itself is skipped entirely when dist_u is kInfinity.
inline void relax_owned(ColumnBlock& b, VertexId u, Weight dist_u) {
  if (u >= b.col_begin && u < b.col_end) b.loc_visited[u - b.col_begin] = 1;
  if (dist_u == kInfinity) return;
  const std::size_t loc_n = b.loc_n();
  const Weight* row = b.adj_block.data() + u * loc_n;
  for (std::size_t j = 0; j < loc_n; ++j) {
    if (b.loc_visited[j]) continue;
    const Weight w = row[j];
    if (w != kInfinity && dist_u + w < b.loc_dist[j]) {
      b.loc_dist[j] = dist_u + w;
      b.loc_pred[j] = u;
    }
  }
}

enum class WorkerMode {
  threaded,    // p OS threads synchronized by a barrier per round
  sequential,  // workers multiplexed on the calling thread, same arithmetic
};

struct PartitionedPhases {
  double scatter_s = 0;
  double rounds_s = 0;
  double gather_s = 0;
};

struct PartitionedRun {
  ShortestPathResult result;
  CollectiveStats stats;
  PartitionedPhases phases;
};

namespace detail {

// Candidate slots are double-buffered across rounds so a single barrier per
// round separates this round's reads from the next round's writes.
inline void partitioned_rounds_sequential(std::vector<ColumnBlock>& blocks,
                                          std::size_t padded_n) {
  const std::size_t p = blocks.size();
  std::array<std::vector<MinLocPair>, 2> cand{std::vector<MinLocPair>(p),
                                              std::vector<MinLocPair>(p)};
  for (std::size_t r = 0; r < padded_n; ++r) {
    std::vector<MinLocPair>& slot = cand[r & 1];
    for (std::size_t k = 0; k < p; ++k) slot[k] = local_min(blocks[k]);
    const MinLocPair winner = allreduce_minloc(slot);
    for (std::size_t k = 0; k < p; ++k)
      relax_owned(blocks[k], winner.vertex, winner.dist);
  }
}

inline void partitioned_rounds_threaded(std::vector<ColumnBlock>& blocks,
                                        std::size_t padded_n) {
  const std::size_t p = blocks.size();
  std::array<std::vector<MinLocPair>, 2> cand{std::vector<MinLocPair>(p),
                                              std::vector<MinLocPair>(p)};
  std::barrier sync(static_cast<std::ptrdiff_t>(p));
  auto worker = [&](std::size_t k) {
    ColumnBlock& block = blocks[k];
    for (std::size_t r = 0; r < padded_n; ++r) {
      std::vector<MinLocPair>& slot = cand[r & 1];
      slot[k] = local_min(block);
      sync.arrive_and_wait();
      const MinLocPair winner = allreduce_minloc(slot);
      relax_owned(block, winner.vertex, winner.dist);
    }
  };
  std::vector<std::jthread> threads;
  threads.reserve(p);
  for (std::size_t k = 0; k < p; ++k) threads.emplace_back(worker, k);
}

}  // namespace detail

// The column-partitioned engine: scatter, padded_n synchronized rounds of
// (local_min -> allreduce_minloc -> relax_owned), then gather. Rounds always
// run to padded_n with no early exit, mirroring the serial engine's fixed
// loop. Distances are identical to dijkstra_serial on the same inputs, in
// either worker mode.
inline PartitionedRun dijkstra_partitioned(const Graph& g, VertexId source,
                                           std::size_t p,
                                           WorkerMode mode = WorkerMode::threaded) {
  if (p < 1) throw std::invalid_argument("dijkstra_partitioned: p >= 1");
  if (source >= g.n)
    throw std::invalid_argument("dijkstra_partitioned: source out of range");

  PartitionedRun run;
  detail::Stopwatch watch;

  const PartitionPlan plan = make_partition_plan(g.n, p);
  std::vector<ColumnBlock> blocks = scatter_columns(g, plan);
  blocks[source / plan.loc_n].loc_dist[source % plan.loc_n] = 0;
  for (std::size_t k = 1; k < p; ++k)
    run.stats.scatter_bytes += blocks[k].adj_block.size() * sizeof(Weight);
  run.phases.scatter_s = watch.lap();

  if (p == 1 || mode == WorkerMode::sequential)
    detail::partitioned_rounds_sequential(blocks, plan.padded_n);
  else
    detail::partitioned_rounds_threaded(blocks, plan.padded_n);
  run.stats.allreduce_count = plan.padded_n;  // one elect per round
  run.phases.rounds_s = watch.lap();

  ShortestPathResult& r = run.result;
  r.source = source;
  r.dist.assign(g.n, kInfinity);
  r.pred.assign(g.n, kNoVertex);
  for (const ColumnBlock& b : blocks) {
    for (std::size_t j = 0; j < b.loc_n(); ++j) {
      const std::size_t v = b.col_begin + j;
      if (v >= g.n) continue;  // padding truncated
      r.dist[v] = b.loc_dist[j];
      r.pred[v] = b.loc_pred[j];
    }
    if (b.owner != 0)
      run.stats.gather_bytes +=
          b.loc_dist.size() * sizeof(Weight) + b.loc_pred.size() * sizeof(VertexId);
  }
  run.phases.gather_s = watch.lap();
  return run;
}

}  // namespace sssp
