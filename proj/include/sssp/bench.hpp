#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sssp/dataparallel.hpp"
#include "sssp/generate.hpp"
#include "sssp/graph.hpp"
#include "sssp/oracle.hpp"
#include "sssp/partitioned.hpp"
#include "sssp/serial.hpp"
#include "sssp/timing.hpp"

namespace sssp {

enum class EngineKind { serial, partitioned, dataparallel };

inline const char* to_string(EngineKind e) {
  switch (e) {
    case EngineKind::serial: return "serial";
    case EngineKind::partitioned: return "partitioned";
    case EngineKind::dataparallel: return "dataparallel";
  }
  return "?";
}

inline EngineKind engine_from_string(const std::string& s) {
  if (s == "serial") return EngineKind::serial;
  if (s == "partitioned") return EngineKind::partitioned;
  if (s == "dataparallel") return EngineKind::dataparallel;
  throw std::invalid_argument("unknown engine '" + s + "'");
}

enum class Phase { scatter, rounds, gather, transfer_in, transfer_out, algorithm };

// What each engine's timer covers. Graph parsing and matrix construction are
// outside every scope.
inline std::vector<Phase> timing_scope(EngineKind e) {
  switch (e) {
    case EngineKind::serial: return {Phase::algorithm};
    case EngineKind::partitioned:
      return {Phase::scatter, Phase::rounds, Phase::gather};
    case EngineKind::dataparallel:
      return {Phase::transfer_in, Phase::rounds, Phase::transfer_out};
  }
  return {};
}

// One benchmark measurement: the minimum-total repetition of an engine run,
// with its per-phase wall times and instrumentation counters.
struct TimingRecord {
  EngineKind engine = EngineKind::serial;
  std::string graph_id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t workers = 1;  // procs for partitioned, lanes for dataparallel
  std::size_t reps = 1;
  std::optional<double> phase_scatter_s;
  std::optional<double> phase_rounds_s;
  std::optional<double> phase_gather_s;
  std::optional<double> phase_transfer_in_s;
  std::optional<double> phase_transfer_out_s;
  std::optional<double> phase_algorithm_s;
  double total_s = 0;
  std::optional<std::size_t> allreduce_count;
  std::optional<std::size_t> relax_checks;
  std::optional<std::uint64_t> seed;
};

struct ScalingRow {
  std::size_t nodes = 0;
  std::size_t procs = 0;
  double time_s = 0;
  double speedup = 0;
  double efficiency_pct = 0;
};

struct BenchReport {
  std::vector<TimingRecord> records;
  std::vector<ScalingRow> scaling;
};

inline double speedup(double t_serial, double t_parallel) {
  if (t_serial <= 0 || t_parallel <= 0)
    throw std::invalid_argument("speedup: times must be positive");
  return t_serial / t_parallel;
}

// Fraction of the ideal p-fold speedup achieved at p workers, in percent.
inline double strong_scaling_efficiency(double t1, double tp, std::size_t p) {
  if (t1 <= 0 || tp <= 0)
    throw std::invalid_argument("strong_scaling_efficiency: times must be positive");
  if (p < 1) throw std::invalid_argument("strong_scaling_efficiency: p >= 1");
  return 100.0 * t1 / (static_cast<double>(p) * tp);
}

namespace detail {

struct TimedRun {
  TimingRecord record;
  ShortestPathResult result;
};

// Runs an engine reps times, validates each result, and keeps the repetition
// with the lowest scoped total. A run whose result fails validation poisons
// the whole record: wrong answers must never be timed.
inline TimedRun timed_run(EngineKind engine, const Graph& g, VertexId source,
                          std::size_t workers, std::size_t reps,
                          std::size_t group_size = 32) {
  if (reps < 1) throw std::invalid_argument("time_engine: reps >= 1");
  TimedRun best;
  best.record.engine = engine;
  best.record.n = g.n;
  best.record.m = g.edge_count();
  best.record.reps = reps;
  best.record.total_s = -1;

  for (std::size_t rep = 0; rep < reps; ++rep) {
    TimingRecord rec = best.record;
    ShortestPathResult result;
    switch (engine) {
      case EngineKind::serial: {
        OpCounters counters;
        Stopwatch watch;
        result = dijkstra_serial(g, source, counters);
        rec.phase_algorithm_s = watch.lap();
        rec.total_s = *rec.phase_algorithm_s;
        rec.relax_checks = counters.relax_checks;
        rec.workers = 1;
        break;
      }
      case EngineKind::partitioned: {
        if (workers < 1)
          throw std::invalid_argument("time_engine: partitioned needs workers >= 1");
        PartitionedRun run = dijkstra_partitioned(g, source, workers);
        result = std::move(run.result);
        rec.phase_scatter_s = run.phases.scatter_s;
        rec.phase_rounds_s = run.phases.rounds_s;
        rec.phase_gather_s = run.phases.gather_s;
        rec.total_s = run.phases.scatter_s + run.phases.rounds_s + run.phases.gather_s;
        rec.allreduce_count = run.stats.allreduce_count;
        rec.workers = workers;
        break;
      }
      case EngineKind::dataparallel: {
        LaneConfig cfg;
        cfg.lanes = workers;  // 0 resolves to one lane per vertex
        cfg.group_size = group_size;
        DataParallelRun run = dijkstra_dataparallel(g, source, cfg);
        result = std::move(run.result);
        rec.phase_transfer_in_s = run.phases.transfer_in_s;
        rec.phase_rounds_s = run.phases.rounds_s;
        rec.phase_transfer_out_s = run.phases.transfer_out_s;
        rec.total_s = run.phases.transfer_in_s + run.phases.rounds_s +
                      run.phases.transfer_out_s;
        rec.workers = workers == 0 ? g.n : workers;
        break;
      }
    }
    const auto violations = validate_result(g, result);
    if (!violations.empty()) {
      std::string what = std::string("rejected ") + to_string(engine) +
                         " timing: result failed validation:";
      for (const auto& v : violations) what += "\n  " + v;
      throw std::runtime_error(what);
    }
    if (best.record.total_s < 0 || rec.total_s < best.record.total_s) {
      best.record = rec;
      best.result = std::move(result);
    }
  }
  return best;
}

}  // namespace detail

inline TimingRecord time_engine(EngineKind engine, const Graph& g, VertexId source,
                                std::size_t workers, std::size_t reps,
                                std::size_t group_size = 32) {
  return detail::timed_run(engine, g, source, workers, reps, group_size).record;
}

// --- benchmark suite -------------------------------------------------------

struct GraphSpec {
  enum class Kind { dense, sparse, file };
  Kind kind = Kind::sparse;
  std::size_t nodes = 0;
  std::uint64_t seed = 0;
  std::string path;
  bool directed = false;
};

struct SuiteConfig {
  std::vector<EngineKind> engines;
  std::vector<std::size_t> workers = {1};  // partitioned proc counts
  std::size_t lanes = 0;                   // dataparallel lanes, 0 = per vertex
  std::size_t group_size = 32;
  VertexId source = 0;
  std::size_t reps = 3;
  std::vector<GraphSpec> graphs;
  std::string out = "report.csv";
};

namespace detail {

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!std::string(trim(cur)).empty()) out.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!std::string(trim(cur)).empty()) out.emplace_back(trim(cur));
  return out;
}

inline std::size_t parse_size(const std::string& s, std::size_t line,
                              const char* what) {
  return static_cast<std::size_t>(parse_int(s, line, what));
}

inline GraphSpec parse_graph_spec(const std::string& value, std::size_t line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : value) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  GraphSpec spec;
  if (parts[0] == "dense" || parts[0] == "sparse") {
    if (parts.size() != 3)
      throw ParseError(line, "expected '" + parts[0] + ":<nodes>:<seed>'");
    spec.kind = parts[0] == "dense" ? GraphSpec::Kind::dense : GraphSpec::Kind::sparse;
    spec.nodes = parse_size(parts[1], line, "node count");
    spec.seed = static_cast<std::uint64_t>(parse_int(parts[2], line, "seed"));
  } else if (parts[0] == "file") {
    if (parts.size() < 2 || parts.size() > 3)
      throw ParseError(line, "expected 'file:<path>[:directed]'");
    spec.kind = GraphSpec::Kind::file;
    spec.path = parts[1];
    if (parts.size() == 3) {
      if (parts[2] != "directed")
        throw ParseError(line, "unknown graph option '" + parts[2] + "'");
      spec.directed = true;
    }
  } else {
    throw ParseError(line, "unknown graph kind '" + parts[0] + "'");
  }
  return spec;
}

}  // namespace detail

// Flat key = value config. Keys: engines, workers, lanes, group_size, source,
// reps, graph (repeatable), out. '#'-prefixed and blank lines are ignored.
inline SuiteConfig parse_suite_config(std::istream& in) {
  SuiteConfig cfg;
  std::string raw;
  std::size_t line_no = 0;
  bool workers_set = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line(detail::trim(raw));
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected 'key = value'");
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string value(detail::trim(line.substr(eq + 1)));
    if (key == "engines") {
      for (const auto& name : detail::split_list(value))
        cfg.engines.push_back(engine_from_string(name));
    } else if (key == "workers") {
      cfg.workers.clear();
      for (const auto& tok : detail::split_list(value))
        cfg.workers.push_back(detail::parse_size(tok, line_no, "worker count"));
      workers_set = true;
    } else if (key == "lanes") {
      cfg.lanes = detail::parse_size(value, line_no, "lane count");
    } else if (key == "group_size") {
      cfg.group_size = detail::parse_size(value, line_no, "group size");
    } else if (key == "source") {
      cfg.source = detail::parse_size(value, line_no, "source vertex");
    } else if (key == "reps") {
      cfg.reps = detail::parse_size(value, line_no, "repetitions");
    } else if (key == "graph") {
      cfg.graphs.push_back(detail::parse_graph_spec(value, line_no));
    } else if (key == "out") {
      cfg.out = value;
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  if (workers_set && cfg.workers.empty())
    throw ParseError(line_no, "workers list is empty");
  return cfg;
}

namespace detail {

struct MaterializedGraph {
  Graph graph;
  std::string id;
  std::optional<std::uint64_t> seed;
};

inline MaterializedGraph materialize(const GraphSpec& spec) {
  MaterializedGraph mg;
  switch (spec.kind) {
    case GraphSpec::Kind::dense: {
      EdgeList el = generate_dense(spec.nodes, spec.seed);
      mg.graph = graph_from_edges(el, false);
      mg.id = "dense-" + std::to_string(el.n) + "-" + std::to_string(el.edges.size());
      mg.seed = spec.seed;
      break;
    }
    case GraphSpec::Kind::sparse: {
      EdgeList el = generate_sparse(spec.nodes, spec.seed);
      mg.graph = graph_from_edges(el, false);
      mg.id = "sparse-" + std::to_string(el.n) + "-" + std::to_string(el.edges.size());
      mg.seed = spec.seed;
      break;
    }
    case GraphSpec::Kind::file: {
      std::ifstream in(spec.path);
      if (!in) throw std::runtime_error("cannot open graph file '" + spec.path + "'");
      mg.graph = parse_edge_list(in, spec.directed);
      mg.id = std::filesystem::path(spec.path).stem().string();
      break;
    }
  }
  return mg;
}

inline std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

inline std::string opt_seconds(const std::optional<double>& v) {
  return v ? format_fixed(*v, 9) : std::string();
}

template <typename T>
std::string opt_count(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace detail

inline constexpr const char* kCsvHeader =
    "engine,graph_id,n,m,workers,reps,phase_scatter_s,phase_rounds_s,"
    "phase_gather_s,phase_transfer_in_s,phase_transfer_out_s,phase_algorithm_s,"
    "total_s,allreduce_count,relax_checks,seed";

inline void write_csv(const std::vector<TimingRecord>& records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const TimingRecord& r : records) {
    out << to_string(r.engine) << ',' << r.graph_id << ',' << r.n << ',' << r.m
        << ',' << r.workers << ',' << r.reps << ','
        << detail::opt_seconds(r.phase_scatter_s) << ','
        << detail::opt_seconds(r.phase_rounds_s) << ','
        << detail::opt_seconds(r.phase_gather_s) << ','
        << detail::opt_seconds(r.phase_transfer_in_s) << ','
        << detail::opt_seconds(r.phase_transfer_out_s) << ','
        << detail::opt_seconds(r.phase_algorithm_s) << ','
        << detail::format_fixed(r.total_s, 9) << ','
        << detail::opt_count(r.allreduce_count) << ','
        << detail::opt_count(r.relax_checks) << ','
        << detail::opt_count(r.seed) << '\n';
  }
}

inline constexpr const char* kScalingCsvHeader =
    "nodes,procs,time_s,speedup,efficiency_pct";

inline void write_scaling_csv(const std::vector<ScalingRow>& rows,
                              std::ostream& out) {
  out << kScalingCsvHeader << '\n';
  for (const ScalingRow& r : rows) {
    out << r.nodes << ',' << r.procs << ',' << detail::format_fixed(r.time_s, 9)
        << ',' << detail::format_fixed(r.speedup, 2) << ','
        << detail::format_fixed(r.efficiency_pct, 2) << '\n';
  }
}

// report.csv -> report.scaling.csv
inline std::string scaling_csv_path(std::string csv_path) {
  const std::string suffix = ".csv";
  if (csv_path.size() >= suffix.size() &&
      csv_path.compare(csv_path.size() - suffix.size(), suffix.size(), suffix) == 0)
    csv_path.resize(csv_path.size() - suffix.size());
  return csv_path + ".scaling.csv";
}

// Executes the whole engines x graphs grid. Every run is validated, and all
// engines' distance arrays on a graph are cross-checked before any report is
// written; one divergent vertex aborts the suite. Scaling rows are derived
// for each graph that has a partitioned p=1 baseline.
inline BenchReport run_suite(const SuiteConfig& cfg, std::ostream& log = std::cout) {
  if (cfg.engines.empty() || cfg.graphs.empty())
    throw std::runtime_error("nothing to run");

  BenchReport report;
  for (const GraphSpec& spec : cfg.graphs) {
    detail::MaterializedGraph mg = detail::materialize(spec);
    if (cfg.source >= mg.graph.n)
      throw std::runtime_error("source vertex out of range for graph " + mg.id);
    log << "graph " << mg.id << " (n=" << mg.graph.n << ")\n";

    std::vector<Weight> reference_dist;
    std::string reference_label;
    auto take = [&](detail::TimedRun&& run, const std::string& label) {
      run.record.graph_id = mg.id;
      run.record.seed = mg.seed;
      if (reference_dist.empty() && !run.result.dist.empty()) {
        reference_dist = run.result.dist;
        reference_label = label;
      } else {
        for (std::size_t v = 0; v < reference_dist.size(); ++v) {
          if (run.result.dist[v] != reference_dist[v]) {
            std::ostringstream msg;
            msg << "cross-engine mismatch on " << mg.id << " at vertex " << v
                << ": " << reference_label << "=" << reference_dist[v] << ", "
                << label << "=" << run.result.dist[v];
            throw std::runtime_error(msg.str());
          }
        }
      }
      log << "  " << label << ": total " << detail::format_fixed(run.record.total_s, 6)
          << " s\n";
      report.records.push_back(std::move(run.record));
    };

    for (EngineKind engine : cfg.engines) {
      switch (engine) {
        case EngineKind::serial:
          take(detail::timed_run(engine, mg.graph, cfg.source, 1, cfg.reps), "serial");
          break;
        case EngineKind::partitioned:
          for (std::size_t p : cfg.workers)
            take(detail::timed_run(engine, mg.graph, cfg.source, p, cfg.reps,
                                   cfg.group_size),
                 "partitioned p=" + std::to_string(p));
          break;
        case EngineKind::dataparallel:
          take(detail::timed_run(engine, mg.graph, cfg.source, cfg.lanes, cfg.reps,
                                 cfg.group_size),
               "dataparallel");
          break;
      }
    }

    // Strong scaling needs the p=1 baseline of the same engine.
    const TimingRecord* baseline = nullptr;
    for (const TimingRecord& r : report.records)
      if (r.graph_id == mg.id && r.engine == EngineKind::partitioned && r.workers == 1)
        baseline = &r;
    if (baseline) {
      for (const TimingRecord& r : report.records) {
        if (r.graph_id != mg.id || r.engine != EngineKind::partitioned) continue;
        ScalingRow row;
        row.nodes = r.n;
        row.procs = r.workers;
        row.time_s = r.total_s;
        row.speedup = speedup(baseline->total_s, r.total_s);
        row.efficiency_pct =
            strong_scaling_efficiency(baseline->total_s, r.total_s, r.workers);
        report.scaling.push_back(row);
      }
    }
  }
  return report;
}

inline void write_report_files(const BenchReport& report, const std::string& csv_path) {
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot write '" + csv_path + "'");
  write_csv(report.records, out);
  const std::string scaling_path = scaling_csv_path(csv_path);
  std::ofstream sout(scaling_path);
  if (!sout) throw std::runtime_error("cannot write '" + scaling_path + "'");
  write_scaling_csv(report.scaling, sout);
}

}  // namespace sssp
