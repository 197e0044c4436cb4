// netcover command line: generate graphs, run a single recruiting policy,
// sweep the full simulation protocol, query the exact oracle, plot CSVs.
//
// Exit codes: 0 success (run: full cover or budget reached), 2 usage or
// data errors, 3 run ended exhausted, 4 strict-audit violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "netcover/experiment.hpp"
#include "netcover/generators.hpp"
#include "netcover/graph.hpp"
#include "netcover/oracle.hpp"
#include "netcover/policies.hpp"
#include "netcover/svg_plot.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 2;
constexpr int exit_exhausted = 3;
constexpr int exit_audit = 4;

netcover::Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return netcover::load_edge_list(in);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

struct GenerateArgs {
  std::string model = "er";
  std::size_t n = 0;
  double p = -1.0;  // <0: auto
  std::size_t m = 0;  // 0: default 2
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  auto model = netcover::graph_model_from_string(args.model);
  netcover::Graph g;
  if (model == netcover::GraphModel::erdos_renyi) {
    if (args.m != 0) {
      std::cerr << "error: --m applies to the ba model only\n";
      return exit_error;
    }
    double p = args.p >= 0 ? args.p : netcover::default_er_probability(args.n);
    g = netcover::gen_erdos_renyi(args.n, p, args.seed);
  } else {
    if (args.p >= 0) {
      std::cerr << "error: --p applies to the er model only\n";
      return exit_error;
    }
    g = netcover::gen_barabasi_albert(args.n, args.m ? args.m : 2, args.seed);
  }
  write_text_file(args.out, netcover::write_edge_list(g));
  std::cout << "nodes=" << g.node_count() << " edges=" << g.edge_count()
            << " file=" << args.out << '\n';
  return exit_ok;
}

struct RunArgs {
  std::string graph;
  std::string algo;
  std::string level;  // empty: the algorithm's natural level
  double alpha = 0.5;
  std::string zeta = "uniform";
  std::int64_t initial = -1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  // 0 = unlimited
  bool strict_audit = false;
};

int cmd_run(const RunArgs& args) {
  netcover::Graph g = load_graph_file(args.graph);
  netcover::PolicyConfig cfg;
  cfg.algorithm = netcover::algorithm_from_string(args.algo);
  cfg.zeta = netcover::zeta_from_string(args.zeta);
  cfg.alpha = args.alpha;
  cfg.seed = args.seed;
  if (args.initial >= 0)
    cfg.initial_node = static_cast<netcover::NodeId>(args.initial);
  netcover::KnowledgeLevel level =
      args.level.empty() ? netcover::natural_level(cfg.algorithm)
                         : netcover::knowledge_level_from_string(args.level);
  netcover::RunOptions opts;
  if (args.budget > 0) opts.budget = args.budget;
  opts.strict_audit = args.strict_audit;

  netcover::RunRecord rec = netcover::run(g, cfg, level, opts);

  std::cout << "algorithm=" << to_string(rec.algorithm) << '\n'
            << "level=" << to_string(rec.level) << '\n'
            << "n=" << rec.n << '\n'
            << "seed=" << rec.seed << '\n';
  std::cout << "initial_node=";
  if (rec.initial_node)
    std::cout << *rec.initial_node;
  else
    std::cout << '-';
  std::cout << '\n';
  std::cout << "final_recruits=" << rec.final_recruits << '\n'
            << "termination=" << to_string(rec.termination) << '\n';
  std::cout << "recruit_order=";
  for (std::size_t i = 0; i < rec.recruit_order.size(); ++i)
    std::cout << (i ? "," : "") << rec.recruit_order[i];
  std::cout << '\n' << "cover_trajectory=";
  for (std::size_t i = 0; i < rec.cover_sizes.size(); ++i)
    std::cout << (i ? "," : "") << rec.cover_sizes[i];
  std::cout << '\n'
            << "illegal_queries=" << rec.audit.total_illegal() << '\n'
            << rec.audit.to_string() << '\n'
            << "wall_ms=" << netcover::format_double(rec.wall_ms, 4) << '\n';
  return rec.termination == netcover::Termination::exhausted ? exit_exhausted
                                                             : exit_ok;
}

struct SweepArgs {
  std::string config;
  std::string out_dir;
  std::size_t workers = 0;  // 0 = hardware concurrency
};

int cmd_sweep(const SweepArgs& args) {
  netcover::ExperimentConfig cfg =
      netcover::ExperimentConfig::from_file(args.config);
  std::size_t workers = args.workers
                            ? args.workers
                            : std::max(1u, std::thread::hardware_concurrency());
  std::filesystem::create_directories(args.out_dir);
  auto path = [&](const std::string& name) {
    return (std::filesystem::path(args.out_dir) / name).string();
  };

  write_text_file(path("effective.cfg"), cfg.to_text());
  std::cout << "wrote " << path("effective.cfg") << '\n';

  for (netcover::GraphModel model : cfg.generators) {
    std::string tag = to_string(model);
    std::cerr << "sweep " << tag << ": " << cfg.sizes.size() << " sizes x "
              << cfg.instances_per_size << " instances, " << workers
              << " workers\n";
    auto records = netcover::run_sweep(cfg, model, workers);
    auto rows = netcover::aggregate(records);

    std::ostringstream summary, detail;
    netcover::write_summary_csv(summary, rows);
    netcover::write_detail_csv(detail, records);
    write_text_file(path("summary_" + tag + ".csv"), summary.str());
    write_text_file(path("runs_" + tag + ".csv"), detail.str());
    std::cout << "wrote " << path("summary_" + tag + ".csv") << '\n';
    std::cout << "wrote " << path("runs_" + tag + ".csv") << '\n';

    // one figure per problem family, as long as its algorithms were run
    std::vector<netcover::SummaryRow> scp_rows, mcc_rows;
    for (const auto& row : rows) {
      if (row.algorithm == netcover::AlgorithmId::mcc1 ||
          row.algorithm == netcover::AlgorithmId::mcc2)
        mcc_rows.push_back(row);
      else
        scp_rows.push_back(row);
    }
    auto emit_family = [&](const std::string& family,
                           const std::vector<netcover::SummaryRow>& frows) {
      if (frows.empty()) return;
      std::ostringstream svg;
      netcover::emit_plot(svg, frows,
                          tag + " " + family + ": recruits to full cover");
      std::string name = "fig_" + tag + "_" + family + ".svg";
      write_text_file(path(name), svg.str());
      std::cout << "wrote " << path(name) << '\n';
    };
    emit_family("scp", scp_rows);
    emit_family("mcc", mcc_rows);
  }
  return exit_ok;
}

struct OracleArgs {
  std::string graph;
  std::uint64_t k = 0;
  bool connected = false;
  bool min_cover = false;
};

int cmd_oracle(const OracleArgs& args) {
  if (!args.min_cover && args.k == 0) {
    std::cerr << "error: pass --k (>= 1) or --min-cover\n";
    return exit_error;
  }
  netcover::Graph g = load_graph_file(args.graph);
  netcover::OracleResult res;
  if (args.min_cover) {
    res = netcover::min_recruits_full_cover(g, args.connected);
    if (!res.feasible) {
      std::cout << "feasible=false\n";
      return exit_ok;
    }
    std::cout << "min_recruits=" << res.best_set.size() << '\n';
  } else {
    res = args.connected
              ? netcover::brute_force_max_connected_cover(g, args.k)
              : netcover::brute_force_max_coverage(g, args.k);
  }
  std::cout << "best_set=";
  for (std::size_t i = 0; i < res.best_set.size(); ++i)
    std::cout << (i ? "," : "") << res.best_set[i];
  std::cout << '\n'
            << "cover_size=" << res.cover_size << '\n'
            << "explored=" << res.explored << '\n';
  return exit_ok;
}

struct PlotArgs {
  std::string csv;
  std::string out;
  std::string title = "recruits to full cover";
};

int cmd_plot(const PlotArgs& args) {
  std::ifstream in(args.csv);
  if (!in) throw std::runtime_error("cannot open csv file: " + args.csv);
  auto rows = netcover::read_summary_csv(in);
  std::ostringstream svg;
  netcover::emit_plot(svg, rows, args.title);
  write_text_file(args.out, svg.str());
  std::cout << "wrote " << args.out << '\n';
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coverage and connected-coverage recruiting heuristics"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* cgen = app.add_subcommand("generate", "write a random graph");
  cgen->add_option("--model", gen.model, "er | ba")->required();
  cgen->add_option("--n", gen.n, "node count")->required();
  cgen->add_option("--p", gen.p, "er edge probability (default 2 ln(n)/n)");
  cgen->add_option("--m", gen.m, "ba edges per new vertex (default 2)");
  cgen->add_option("--seed", gen.seed, "rng seed");
  cgen->add_option("--out", gen.out, "output edge-list file")->required();

  RunArgs runa;
  auto* crun = app.add_subcommand("run", "run one policy on a graph");
  crun->add_option("--graph", runa.graph, "edge-list file")->required();
  crun->add_option("--algo", runa.algo, "scp1|scp2|scp3|scp4|mcc1|mcc2")
      ->required();
  crun->add_option("--level", runa.level,
                   "knowledge level (default: the policy's natural level)");
  crun->add_option("--alpha", runa.alpha, "scp3 random-branch probability");
  crun->add_option("--zeta", runa.zeta, "uniform | degree");
  crun->add_option("--initial", runa.initial, "initial node id");
  crun->add_option("--seed", runa.seed, "rng seed");
  crun->add_option("--budget", runa.budget, "max recruits (0 = unlimited)");
  crun->add_flag("--strict-audit", runa.strict_audit,
                 "abort on the first illegal query");

  SweepArgs sweep;
  auto* csweep = app.add_subcommand("sweep", "run a configured experiment");
  csweep->add_option("--config", sweep.config, "config file")->required();
  csweep->add_option("--out-dir", sweep.out_dir, "output directory")
      ->required();
  csweep->add_option("--workers", sweep.workers,
                     "worker threads (0 = hardware)");

  OracleArgs oracle;
  auto* coracle = app.add_subcommand("oracle", "exact small-instance solver");
  coracle->add_option("--graph", oracle.graph, "edge-list file")->required();
  coracle->add_option("--k", oracle.k, "max recruits");
  coracle->add_flag("--connected", oracle.connected,
                    "restrict to connected recruit sets");
  coracle->add_flag("--min-cover", oracle.min_cover,
                    "smallest recruit count covering the whole graph");

  PlotArgs plot;
  auto* cplot = app.add_subcommand("plot", "plot a summary csv as svg");
  cplot->add_option("--csv", plot.csv, "summary csv file")->required();
  cplot->add_option("--out", plot.out, "output svg file")->required();
  cplot->add_option("--title", plot.title, "plot title");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cgen->parsed()) return cmd_generate(gen);
    if (crun->parsed()) return cmd_run(runa);
    if (csweep->parsed()) return cmd_sweep(sweep);
    if (coracle->parsed()) return cmd_oracle(oracle);
    if (cplot->parsed()) return cmd_plot(plot);
  } catch (const netcover::audit_violation& e) {
    std::cerr << "audit violation: " << e.what() << '\n';
    return exit_audit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
