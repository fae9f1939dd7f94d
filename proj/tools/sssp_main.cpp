#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "sssp/sssp.hpp"

namespace {

void print_phase(const char* name, const std::optional<double>& value) {
  if (value) std::cout << "  " << name << ": " << sssp::detail::format_fixed(*value, 9) << " s\n";
}

int cmd_run(const std::string& engine_name, const std::string& graph_path,
            bool directed, std::size_t source, std::size_t workers,
            std::size_t reps, std::size_t group_size) {
  std::ifstream in(graph_path);
  if (!in) {
    std::cerr << "error: cannot open '" << graph_path << "'\n";
    return 1;
  }
  const sssp::Graph g = sssp::parse_edge_list(in, directed);
  const sssp::EngineKind engine = sssp::engine_from_string(engine_name);

  auto run = sssp::detail::timed_run(engine, g, source, workers, reps, group_size);
  sssp::TimingRecord& rec = run.record;

  std::cout << "engine: " << sssp::to_string(engine) << "  graph: " << graph_path
            << " (n=" << g.n << ", m=" << rec.m << ", "
            << (directed ? "directed" : "undirected") << ")"
            << "  workers: " << rec.workers << "  reps: " << reps << "\n";
  print_phase("scatter_s     ", rec.phase_scatter_s);
  print_phase("transfer_in_s ", rec.phase_transfer_in_s);
  print_phase("rounds_s      ", rec.phase_rounds_s);
  print_phase("gather_s      ", rec.phase_gather_s);
  print_phase("transfer_out_s", rec.phase_transfer_out_s);
  print_phase("algorithm_s   ", rec.phase_algorithm_s);
  std::cout << "  total_s       : " << sssp::detail::format_fixed(rec.total_s, 9)
            << " s\n";
  if (rec.allreduce_count)
    std::cout << "  allreduce_count: " << *rec.allreduce_count << "\n";
  if (rec.relax_checks)
    std::cout << "  relax_checks  : " << *rec.relax_checks << "\n";

  std::size_t reached = 0;
  for (sssp::Weight d : run.result.dist)
    if (d != sssp::kInfinity) ++reached;
  std::cout << "source " << source << ": reached " << reached << "/" << g.n
            << " vertices\n";
  const std::size_t preview = std::min<std::size_t>(g.n, 10);
  std::cout << "dist[0.." << preview - 1 << "] =";
  for (std::size_t v = 0; v < preview; ++v) {
    if (run.result.dist[v] == sssp::kInfinity)
      std::cout << " inf";
    else
      std::cout << ' ' << run.result.dist[v];
  }
  std::cout << "\n";
  return 0;
}

int cmd_gen(const std::string& kind, std::size_t nodes, std::uint64_t seed,
            const std::string& out_path) {
  sssp::EdgeList el;
  if (kind == "dense")
    el = sssp::generate_dense(nodes, seed);
  else if (kind == "sparse")
    el = sssp::generate_sparse(nodes, seed);
  else {
    std::cerr << "error: unknown kind '" << kind << "'\n";
    return 1;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 1;
  }
  sssp::write_edge_list(el, out);
  std::cout << "wrote " << el.n << " nodes, " << el.edges.size() << " edges to "
            << out_path << "\n";
  return 0;
}

int cmd_bench(const std::string& config_path, std::string out_path) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot open '" << config_path << "'\n";
    return 1;
  }
  sssp::SuiteConfig cfg = sssp::parse_suite_config(in);
  if (!out_path.empty()) cfg.out = out_path;
  const sssp::BenchReport report = sssp::run_suite(cfg, std::cout);
  sssp::write_report_files(report, cfg.out);
  std::cout << "wrote " << report.records.size() << " timing rows to " << cfg.out
            << " and " << report.scaling.size() << " scaling rows to "
            << sssp::scaling_csv_path(cfg.out) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-source shortest path engines and benchmark harness"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run one engine on a graph file");
  std::string engine = "serial";
  std::string graph_path;
  bool directed = false;
  std::size_t source = 0;
  std::size_t workers = 0;
  std::size_t reps = 3;
  std::size_t group_size = 32;
  run->add_option("--engine", engine, "serial | partitioned | dataparallel")
      ->required();
  run->add_option("--graph", graph_path, "edge-list file")->required();
  run->add_flag("-w", directed, "treat the input as a directed graph");
  run->add_option("--source", source, "source vertex (default 0)");
  run->add_option("--workers", workers,
                  "partitioned procs (default 4) / dataparallel lanes (default n)");
  run->add_option("--reps", reps, "repetitions, minimum-total wins (default 3)");
  run->add_option("--group-size", group_size, "dataparallel lanes per group");

  auto* gen = app.add_subcommand("gen", "generate a graph and write an edge list");
  std::string kind;
  std::size_t nodes = 0;
  std::uint64_t seed = 0;
  std::string gen_out;
  gen->add_option("--kind", kind, "dense | sparse")->required();
  gen->add_option("--nodes", nodes, "vertex count")->required();
  gen->add_option("--seed", seed, "generator seed")->required();
  gen->add_option("--out", gen_out, "output file")->required();

  auto* bench = app.add_subcommand("bench", "run a benchmark suite from a config");
  std::string config_path;
  std::string bench_out;
  bench->add_option("--config", config_path, "suite config file")->required();
  bench->add_option("--out", bench_out, "report CSV path (overrides config)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (workers == 0 && engine == "partitioned") workers = 4;
      return cmd_run(engine, graph_path, directed, source, workers, reps, group_size);
    }
    if (gen->parsed()) return cmd_gen(kind, nodes, seed, gen_out);
    if (bench->parsed()) return cmd_bench(config_path, bench_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
