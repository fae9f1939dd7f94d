// Acceptance suite: one test case per criterion, one [PASS]/[FAIL] line each.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "sssp/sssp.hpp"
#include "test_support.hpp"

using namespace sssp;

namespace {

class AcceptanceReporter : public Catch::EventListenerBase {
 public:
  using EventListenerBase::EventListenerBase;

  void testCaseEnded(const Catch::TestCaseStats& stats) override {
    std::printf("[%s] %s\n", stats.totals.assertions.allOk() ? "PASS" : "FAIL",
                stats.testInfo->name.c_str());
    std::fflush(stdout);
  }
};

CATCH_REGISTER_LISTENER(AcceptanceReporter)

Graph unit_path(std::size_t edges) {
  Graph g = Graph::no_edges(edges + 1, true);
  for (VertexId u = 0; u < edges; ++u) g.at(u, u + 1) = 1;
  return g;
}

}  // namespace

TEST_CASE("criterion 1: all engines equal the brute-force oracle on 100 graphs per shape") {
  std::mt19937_64 rng(20240601);
  const std::size_t partitioned_p[] = {1, 2, 3, 4, 7, 32};
  std::size_t graphs_checked = 0;

  for (const bool dense : {false, true}) {
    for (const bool directed : {false, true}) {
      for (int i = 0; i < 100; ++i) {
        const std::size_t n = 7 + rng() % 194;  // n in {7..200}
        const EdgeList el =
            dense ? generate_dense(n, rng()) : generate_sparse(n, rng());
        const Graph g = graph_from_edges(el, directed);
        const VertexId source = rng() % n;
        const DistanceMatrix oracle = all_pairs_bruteforce(g);

        const ShortestPathResult serial = dijkstra_serial(g, source);
        for (VertexId v = 0; v < n; ++v)
          if (serial.dist[v] != oracle.at(source, v))
            FAIL("serial mismatch at n=" << n << " v=" << v);

        for (const std::size_t p : partitioned_p) {
          const PartitionedRun run = dijkstra_partitioned(g, source, p);
          if (run.result.dist != serial.dist)
            FAIL("partitioned p=" << p << " mismatch at n=" << n);
        }

        for (const std::size_t lanes : {std::size_t{1}, std::size_t{4}, n}) {
          LaneConfig cfg;
          cfg.lanes = lanes;
          const DataParallelRun run = dijkstra_dataparallel(g, source, cfg);
          if (run.result.dist != serial.dist)
            FAIL("dataparallel lanes=" << lanes << " mismatch at n=" << n);
        }
        ++graphs_checked;
      }
    }
  }
  REQUIRE(graphs_checked == 400);
}

TEST_CASE("criterion 2: the worked 4-vertex example solves to [0,2,3,5] on every engine") {
  const Graph g = test_support::four_vertex_undirected();
  const std::vector<Weight> expected = {0, 2, 3, 5};

  const ShortestPathResult serial = dijkstra_serial(g, 0);
  REQUIRE(serial.dist == expected);
  REQUIRE(validate_result(g, serial).empty());

  const PartitionedRun part = dijkstra_partitioned(g, 0, 3);
  REQUIRE(part.result.dist == expected);
  REQUIRE(validate_result(g, part.result).empty());

  const DataParallelRun dp = dijkstra_dataparallel(g, 0);
  REQUIRE(dp.result.dist == expected);
  REQUIRE(validate_result(g, dp.result).empty());
}

TEST_CASE("criterion 3: padding rule matches the worked case and is minimal on the 256x256 grid") {
  REQUIRE(pad_vertex_count(4, 3) == 6);
  const Graph padded = pad_graph(test_support::four_vertex_undirected(), 6);
  REQUIRE(padded.n == 6);

  for (std::size_t n = 1; n <= 256; ++n)
    for (std::size_t p = 1; p <= 256; ++p) {
      const std::size_t result = pad_vertex_count(n, p);
      if (result % p != 0) FAIL("not a multiple at n=" << n << " p=" << p);
      if (result < n || result < p) FAIL("too small at n=" << n << " p=" << p);
      if (p <= n && result - n >= p) FAIL("not minimal at n=" << n << " p=" << p);
      if (p > n && result != p) FAIL("procs>n branch at n=" << n << " p=" << p);
    }
  SUCCEED("grid exhausted");
}

TEST_CASE("criterion 4: strong-scaling efficiency reproduces all five reference rows") {
  const double t1 = 10.28;
  const struct {
    std::size_t procs;
    double time;
    double expected;
  } rows[] = {
      {2, 7.67, 67.01}, {4, 5.88, 43.71}, {16, 8.05, 7.98},
      {32, 2.36, 13.61}, {64, 2.90, 5.53},
  };
  for (const auto& row : rows) {
    const double eff = strong_scaling_efficiency(t1, row.time, row.procs);
    REQUIRE(std::abs(eff - row.expected) <= 0.01);
  }
}

TEST_CASE("criterion 5: dense and sparse graphs cost identical instrumented scans") {
  for (const std::size_t n : {std::size_t{100}, std::size_t{500}}) {
    const Graph dense = graph_from_edges(generate_dense(n, 11), false);
    const Graph sparse = graph_from_edges(generate_sparse(n, 11), false);
    OpCounters cd, cs;
    dijkstra_serial(dense, 0, cd);
    dijkstra_serial(sparse, 0, cs);
    REQUIRE(cd.extract_min_scans == n * n);
    REQUIRE(cs.extract_min_scans == n * n);
    REQUIRE(cd.relax_checks == n * n);
    REQUIRE(cs.relax_checks == n * n);
  }
}

TEST_CASE("criterion 6: fixpoint rounds stay within n and hit k+1 on unit paths") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    test_support::RandomGraphOptions opt;
    opt.dense = (i % 2 == 0);
    opt.directed = (i % 4 < 2);
    opt.max_n = 150;
    const Graph g = test_support::random_graph(rng, opt);
    const DataParallelRun run = dijkstra_dataparallel(g, rng() % g.n);
    REQUIRE(run.rounds <= g.n);
  }
  for (std::size_t k = 1; k <= 9; ++k) {
    const DataParallelRun run = dijkstra_dataparallel(unit_path(k), 0);
    REQUIRE(run.rounds == k + 1);
    for (VertexId v = 0; v <= k; ++v) REQUIRE(run.result.dist[v] == v);
  }
}

TEST_CASE("criterion 7: results are bit-identical under scheduling and interleaving") {
  const Graph g = graph_from_edges(generate_sparse(100, 4242), false);

  LaneConfig cfg;
  cfg.schedule = LaneSchedule::shuffled;
  cfg.shuffle_seed = 1;
  const DataParallelRun first = dijkstra_dataparallel(g, 0, cfg);
  for (std::uint64_t run_idx = 2; run_idx <= 20; ++run_idx) {
    cfg.shuffle_seed = run_idx * 0x9e3779b9;
    const DataParallelRun run = dijkstra_dataparallel(g, 0, cfg);
    REQUIRE(run.result.dist == first.result.dist);
  }

  const PartitionedRun part_first = dijkstra_partitioned(g, 0, 7);
  for (int run_idx = 2; run_idx <= 20; ++run_idx) {
    const PartitionedRun run = dijkstra_partitioned(g, 0, 7);
    REQUIRE(run.result == part_first.result);
  }
}

TEST_CASE("criterion 8: bench suite on a sparse n=4000 graph emits a consistent report") {
  const auto dir = std::filesystem::temp_directory_path() / "sssp_acceptance";
  std::filesystem::create_directories(dir);
  const std::string csv_path = (dir / "report.csv").string();

  std::istringstream config_text(
      "engines = serial, partitioned, dataparallel\n"
      "workers = 1, 2, 4\n"
      "reps = 2\n"
      "graph = sparse:4000:20240601\n"
      "out = " + csv_path + "\n");
  const SuiteConfig cfg = parse_suite_config(config_text);

  std::ostringstream log;
  BenchReport report;
  REQUIRE_NOTHROW(report = run_suite(cfg, log));  // no run rejected by validation
  write_report_files(report, cfg.out);
  REQUIRE(report.records.size() == 5);  // serial + p{1,2,4} + dataparallel

  // Schema conformance, re-read from disk.
  std::ifstream csv(csv_path);
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  REQUIRE(header == kCsvHeader);
  std::size_t rows = 0;
  for (std::string row; std::getline(csv, row);) {
    ++rows;
    REQUIRE(std::count(row.begin(), row.end(), ',') == 15);
  }
  REQUIRE(rows == 5);

  // Efficiency column recomputed independently from the scaling file.
  std::ifstream scaling(scaling_csv_path(csv_path));
  REQUIRE(scaling.good());
  std::getline(scaling, header);
  REQUIRE(header == kScalingCsvHeader);
  double t1 = -1;
  std::size_t scaling_rows = 0;
  std::vector<std::array<double, 4>> parsed;  // procs, time, speedup, eff
  for (std::string row; std::getline(scaling, row);) {
    std::replace(row.begin(), row.end(), ',', ' ');
    std::istringstream fields(row);
    double nodes, procs, time_s, spd, eff;
    fields >> nodes >> procs >> time_s >> spd >> eff;
    REQUIRE(nodes == 4000);
    if (procs == 1) t1 = time_s;
    parsed.push_back({procs, time_s, spd, eff});
    ++scaling_rows;
  }
  REQUIRE(scaling_rows == 3);
  REQUIRE(t1 > 0);
  for (const auto& row : parsed) {
    REQUIRE(std::abs(row[2] - t1 / row[1]) <= 0.005 + 1e-12);
    REQUIRE(std::abs(row[3] - 100.0 * t1 / (row[0] * row[1])) <= 0.005 + 1e-12);
  }

  // Non-gating observation: parallel totals relative to the serial baseline.
  double serial_total = 0;
  for (const TimingRecord& r : report.records)
    if (r.engine == EngineKind::serial) serial_total = r.total_s;
  for (const TimingRecord& r : report.records) {
    if (r.engine == EngineKind::serial) continue;
    std::printf("  note: %s workers=%zu total %.6f s (serial %.6f s, ratio %.2fx)\n",
                to_string(r.engine), r.workers, r.total_s, serial_total,
                r.total_s / serial_total);
  }
  std::filesystem::remove_all(dir);
}
