#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sssp/graph.hpp"
#include "sssp/result.hpp"
#include "sssp/timing.hpp"
#include "sssp/weight.hpp"

namespace sssp {

// How the logical lanes of a round get executed. All three schedules produce
// bit-identical distance arrays: atomic minimum is commutative, so the
// per-round outcome does not depend on interleaving.
enum class LaneSchedule {
  threaded,    // lane groups spread over OS threads
  sequential,  // one lane at a time on the calling thread
  shuffled,    // single-threaded fuzzer: lane steps interleaved at random
};

struct LaneConfig {
  std::size_t lanes = 0;  // 0 resolves to one lane per vertex
  std::size_t group_size = 32;
  LaneSchedule schedule = LaneSchedule::threaded;
  std::uint64_t shuffle_seed = 0;  // interleaving seed for LaneSchedule::shuffled
};

// Shared relaxation state. dist supports atomic compare-and-minimum and is
// monotonically non-increasing per entry; updated is reset at the start of
// every round.
struct RelaxState {
  std::vector<std::atomic<Weight>> dist;
  std::vector<std::atomic<VertexId>> pred;
  std::vector<std::atomic<char>> updated;
  std::vector<Weight> snapshot;  // dist values captured at round start
  std::size_t rounds_executed = 0;

  RelaxState(std::size_t n, VertexId source)
      : dist(n), pred(n), updated(n), snapshot(n, kInfinity) {
    for (std::size_t v = 0; v < n; ++v) {
      dist[v].store(v == source ? 0 : kInfinity, std::memory_order_relaxed);
      pred[v].store(kNoVertex, std::memory_order_relaxed);
      updated[v].store(0, std::memory_order_relaxed);
    }
  }
};

namespace detail {

// Lowers cell to candidate if candidate is smaller; true when this call did
// the lowering.
inline bool atomic_fetch_min(std::atomic<Weight>& cell, Weight candidate) {
  Weight cur = cell.load(std::memory_order_relaxed);
  while (candidate < cur) {
    if (cell.compare_exchange_weak(cur, candidate, std::memory_order_relaxed))
      return true;
  }
  return false;
}

// One (u, v) relaxation attempt against the round-start snapshot of dist[u].
inline void relax_cell(const Graph& g, RelaxState& state, VertexId u, VertexId v) {
  const Weight su = state.snapshot[u];
  if (su == kInfinity) return;
  const Weight w = g.adj[u * g.n + v];
  if (w == kInfinity) return;
  const Weight candidate = su + w;
  if (atomic_fetch_min(state.dist[v], candidate)) {
    state.pred[v].store(u, std::memory_order_relaxed);
    state.updated[v].store(1, std::memory_order_relaxed);
  }
}

// Lane L owns vertices L, L+lanes, L+2*lanes, ...
inline void run_lane(const Graph& g, RelaxState& state, std::size_t lane,
                     std::size_t lanes) {
  for (VertexId u = lane; u < g.n; u += lanes)
    for (VertexId v = 0; v < g.n; ++v) relax_cell(g, state, u, v);
}

inline void run_round_threaded(const Graph& g, RelaxState& state,
                               std::size_t lanes, std::size_t group_size) {
  const std::size_t groups = (lanes + group_size - 1) / group_size;
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t nthreads = std::min(groups, hw);
  if (nthreads <= 1) {
    for (std::size_t lane = 0; lane < lanes; ++lane) run_lane(g, state, lane, lanes);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t grp = t; grp < groups; grp += nthreads) {
        const std::size_t lo = grp * group_size;
        const std::size_t hi = std::min(lanes, lo + group_size);
        for (std::size_t lane = lo; lane < hi; ++lane) run_lane(g, state, lane, lanes);
      }
    });
  }
}

// Scheduling fuzzer: every lane's work is cut into single (u, v) steps and
// the steps of live lanes are interleaved in seed-determined random order.
inline void run_round_shuffled(const Graph& g, RelaxState& state,
                               std::size_t lanes, std::uint64_t seed) {
  const std::size_t n = g.n;
  struct Cursor {
    std::size_t lane;
    VertexId u;
    VertexId v;
  };
  std::vector<Cursor> live;
  for (std::size_t lane = 0; lane < std::min(lanes, n); ++lane)
    live.push_back({lane, static_cast<VertexId>(lane), 0});

  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t bound) {
    const std::uint64_t span = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = span - span % bound;
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  };

  while (!live.empty()) {
    const std::size_t i = pick(live.size());
    Cursor& c = live[i];
    relax_cell(g, state, c.u, c.v);
    if (++c.v == n) {
      c.v = 0;
      c.u += lanes;
      if (c.u >= n) {
        live[i] = live.back();
        live.pop_back();
      }
    }
  }
}

}  // namespace detail

// One synchronized relaxation round: reset the updated flags, snapshot dist,
// let every lane relax its vertices' outgoing edges against the snapshot with
// atomic minimum, then or-reduce the updated flags. Returns whether any
// distance was lowered this round.
inline bool relax_round(const Graph& g, RelaxState& state, const LaneConfig& cfg) {
  const std::size_t n = g.n;
  if (state.dist.size() != n)
    throw std::invalid_argument("relax_round: state sized for a different graph");
  if (cfg.group_size < 1) throw std::invalid_argument("relax_round: group_size >= 1");
  const std::size_t lanes = cfg.lanes == 0 ? std::max<std::size_t>(n, 1) : cfg.lanes;

  for (std::size_t v = 0; v < n; ++v)
    state.updated[v].store(0, std::memory_order_relaxed);
  for (std::size_t v = 0; v < n; ++v)
    state.snapshot[v] = state.dist[v].load(std::memory_order_relaxed);

  switch (cfg.schedule) {
    case LaneSchedule::threaded:
      detail::run_round_threaded(g, state, lanes, cfg.group_size);
      break;
    case LaneSchedule::sequential:
      for (std::size_t lane = 0; lane < lanes; ++lane)
        detail::run_lane(g, state, lane, lanes);
      break;
    case LaneSchedule::shuffled:
      detail::run_round_shuffled(
          g, state, lanes,
          cfg.shuffle_seed ^ (0x9e3779b97f4a7c15ull * (state.rounds_executed + 1)));
      break;
  }

  bool any = false;
  for (std::size_t v = 0; v < n && !any; ++v)
    any = state.updated[v].load(std::memory_order_relaxed) != 0;
  ++state.rounds_executed;
  return any;
}

namespace detail {

// The kernel's pred writes can be overwritten by slower lanes that lost the
// atomic minimum, so after convergence the tree is rebuilt deterministically:
// vertices are attached in ascending (dist, id) order, each to its smallest
// already-attached tight parent. The multi-pass loop matters only when
// zero-weight edges tie several vertices at one distance; everything attaches
// in the first pass otherwise.
inline void reconstruct_predecessors(const Graph& g, RelaxState& state,
                                     VertexId source) {
  const std::size_t n = g.n;
  std::vector<VertexId> order;
  order.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    state.pred[v].store(kNoVertex, std::memory_order_relaxed);
    if (v != source && state.dist[v].load(std::memory_order_relaxed) != kInfinity)
      order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    const Weight da = state.dist[a].load(std::memory_order_relaxed);
    const Weight db = state.dist[b].load(std::memory_order_relaxed);
    return da != db ? da < db : a < b;
  });

  std::vector<char> attached(n, 0);
  attached[source] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const VertexId v : order) {
      if (attached[v]) continue;
      const Weight dv = state.dist[v].load(std::memory_order_relaxed);
      for (VertexId u = 0; u < n; ++u) {
        if (u == v || !attached[u]) continue;
        const Weight w = g.adj[u * n + v];
        if (w == kInfinity) continue;
        const Weight du = state.dist[u].load(std::memory_order_relaxed);
        if (du != kInfinity && du + w == dv) {
          state.pred[v].store(u, std::memory_order_relaxed);
          attached[v] = 1;
          progress = true;
          break;
        }
      }
    }
  }
}

}  // namespace detail

// Working storage standing in for device memory. The engine computes on this
// copy of the matrix, never on the caller's graph, and results pass through
// dist/pred before reaching the caller, so both transfer directions move real
// bytes that the benchmark can time.
struct DeviceBuffers {
  Graph adj;
  std::vector<Weight> dist;
  std::vector<VertexId> pred;

  static DeviceBuffers sized_for(const Graph& g) {
    DeviceBuffers buf;
    buf.adj.n = g.n;
    buf.adj.directed = g.directed;
    buf.adj.adj.resize(g.n * g.n);
    buf.dist.resize(g.n);
    buf.pred.resize(g.n);
    return buf;
  }
};

// Bulk copy host matrix -> working storage. Returns cells copied (n*n).
inline std::size_t transfer_in(const Graph& g, DeviceBuffers& buf) {
  if (buf.adj.adj.size() != g.adj.size())
    throw std::invalid_argument("transfer_in: buffer size mismatch");
  if (!g.adj.empty())
    std::memcpy(buf.adj.adj.data(), g.adj.data(), g.adj.size() * sizeof(Weight));
  buf.adj.n = g.n;
  buf.adj.directed = g.directed;
  return g.adj.size();
}

// Bulk copy working dist/pred -> result buffers. Returns cells copied (2n).
inline std::size_t transfer_out(const RelaxState& state, DeviceBuffers& buf) {
  const std::size_t n = state.dist.size();
  if (buf.dist.size() != n || buf.pred.size() != n)
    throw std::invalid_argument("transfer_out: buffer size mismatch");
  for (std::size_t v = 0; v < n; ++v) {
    buf.dist[v] = state.dist[v].load(std::memory_order_relaxed);
    buf.pred[v] = state.pred[v].load(std::memory_order_relaxed);
  }
  return 2 * n;
}

struct DataParallelPhases {
  double transfer_in_s = 0;
  double rounds_s = 0;
  double transfer_out_s = 0;
};

struct DataParallelRun {
  ShortestPathResult result;
  std::size_t rounds = 0;
  DataParallelPhases phases;
  std::size_t cells_in = 0;
  std::size_t cells_out = 0;
};

// Fixpoint engine: relax_round until a round changes nothing. This is a
// synchronous Bellman-Ford iteration; with non-negative weights its fixpoint
// equals Dijkstra's distances, and it needs at most n rounds because round r
// finalizes every shortest path of r-1 or fewer hops.
inline DataParallelRun dijkstra_dataparallel(const Graph& g, VertexId source,
                                             LaneConfig cfg = LaneConfig{}) {
  if (source >= g.n)
    throw std::invalid_argument("dijkstra_dataparallel: source out of range");

  DataParallelRun run;
  detail::Stopwatch watch;

  DeviceBuffers buf = DeviceBuffers::sized_for(g);
  run.cells_in = transfer_in(g, buf);
  run.phases.transfer_in_s = watch.lap();

  RelaxState state(g.n, source);
  while (relax_round(buf.adj, state, cfg)) {
  }
  detail::reconstruct_predecessors(buf.adj, state, source);
  run.rounds = state.rounds_executed;
  run.phases.rounds_s = watch.lap();

  run.cells_out = transfer_out(state, buf);
  run.result.source = source;
  run.result.dist = buf.dist;
  run.result.pred = buf.pred;
  run.phases.transfer_out_s = watch.lap();
  return run;
}

}  // namespace sssp
