#pragma once

// The simulation protocol: sweeps over graph sizes and algorithms,
// aggregation of recruits-to-full-cover, CSV emission and plots.
//
// Seed tree (see rng.hpp): master -> per instance -> per run, so results
// are reproducible byte for byte and each instance is independent of the
// others. The 3 initial nodes of an instance are drawn once and shared by
// every algorithm run on that instance.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "netcover/generators.hpp"
#include "netcover/policies.hpp"
#include "netcover/svg_plot.hpp"

namespace netcover {

struct ExperimentConfig {
  enum class InitialAssignment {
    shared,  // every initial node runs on every instance
    split,   // instance j uses only initial slot j % initials
  };

  std::vector<GraphModel> generators = {GraphModel::erdos_renyi};
  std::vector<std::size_t> sizes = {50, 100, 150, 200, 250};
  std::size_t instances_per_size = 30;
  std::size_t initials_per_graph = 3;
  InitialAssignment initial_assignment = InitialAssignment::shared;
  std::vector<AlgorithmId> algorithms = {AlgorithmId::scp1, AlgorithmId::scp2,
                                         AlgorithmId::scp3, AlgorithmId::scp4,
                                         AlgorithmId::mcc1, AlgorithmId::mcc2};
  Zeta zeta = Zeta::uniform;
  double alpha = 0.5;
  std::optional<std::size_t> budget;  // nullopt = unlimited
  std::uint64_t master_seed = 1;
  std::optional<double> er_p;  // nullopt = auto: 2 ln(n)/n
  std::size_t ba_m = 2;

  void validate() const {
    if (generators.empty())
      throw std::invalid_argument("config: no generators");
    if (sizes.empty()) throw std::invalid_argument("config: no sizes");
    if (instances_per_size < 1)
      throw std::invalid_argument("config: instances must be >= 1");
    if (initials_per_graph < 1)
      throw std::invalid_argument("config: initials must be >= 1");
    if (algorithms.empty())
      throw std::invalid_argument("config: no algorithms");
    if (alpha < 0.0 || alpha > 1.0)
      throw std::invalid_argument("config: alpha must be in [0, 1]");
    if (er_p && (*er_p < 0.0 || *er_p > 1.0))
      throw std::invalid_argument("config: er_p must be in [0, 1]");
    if (ba_m < 1) throw std::invalid_argument("config: ba_m must be >= 1");
    if (budget && *budget < 1)
      throw std::invalid_argument("config: budget must be >= 1");
    for (std::size_t n : sizes) {
      if (n < 2) throw std::invalid_argument("config: sizes must be >= 2");
      if (n < initials_per_graph)
        throw std::invalid_argument(
            "config: size " + std::to_string(n) +
            " smaller than the number of initial nodes");
    }
  }

  static ExperimentConfig from_stream(std::istream& in);
  static ExperimentConfig from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return from_stream(in);
  }
  std::string to_text() const;
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline std::uint64_t parse_u64(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = std::stoull(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

inline double parse_double(const std::string& s) {
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

}  // namespace detail

// Flat key = value config text; '#' starts a comment, unknown or repeated
// keys are rejected.
inline ExperimentConfig ExperimentConfig::from_stream(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw parse_error("config line " + std::to_string(lineno) +
                        ": expected key = value");
    std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::trim(line.substr(eq + 1));
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      throw parse_error("config line " + std::to_string(lineno) +
                        ": repeated key '" + key + "'");
    seen.push_back(key);
    try {
      if (key == "generators") {
        cfg.generators.clear();
        for (const auto& item : detail::split_list(value))
          cfg.generators.push_back(graph_model_from_string(item));
      } else if (key == "sizes") {
        cfg.sizes.clear();
        for (const auto& item : detail::split_list(value))
          cfg.sizes.push_back(detail::parse_u64(item));
      } else if (key == "instances") {
        cfg.instances_per_size = detail::parse_u64(value);
      } else if (key == "initials") {
        cfg.initials_per_graph = detail::parse_u64(value);
      } else if (key == "initial_assignment") {
        if (value == "shared")
          cfg.initial_assignment = InitialAssignment::shared;
        else if (value == "split")
          cfg.initial_assignment = InitialAssignment::split;
        else
          throw std::invalid_argument("expected shared or split");
      } else if (key == "algorithms") {
        cfg.algorithms.clear();
        for (const auto& item : detail::split_list(value))
          cfg.algorithms.push_back(algorithm_from_string(item));
      } else if (key == "zeta") {
        cfg.zeta = zeta_from_string(value);
      } else if (key == "alpha") {
        cfg.alpha = detail::parse_double(value);
      } else if (key == "budget") {
        if (value == "unlimited")
          cfg.budget.reset();
        else
          cfg.budget = detail::parse_u64(value);
      } else if (key == "master_seed") {
        cfg.master_seed = detail::parse_u64(value);
      } else if (key == "er_p") {
        if (value == "auto")
          cfg.er_p.reset();
        else
          cfg.er_p = detail::parse_double(value);
      } else if (key == "ba_m") {
        cfg.ba_m = detail::parse_u64(value);
      } else {
        throw parse_error("config line " + std::to_string(lineno) +
                          ": unknown key '" + key + "'");
      }
    } catch (const parse_error&) {
      throw;
    } catch (const std::exception& e) {
      throw parse_error("config line " + std::to_string(lineno) + ": bad '" +
                        key + "' value: " + e.what());
    }
  }
  cfg.validate();
  return cfg;
}

inline std::string ExperimentConfig::to_text() const {
  std::ostringstream out;
  auto join = [](auto&& items, auto&& fmt) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) s += ',';
      s += fmt(items[i]);
    }
    return s;
  };
  out << "generators = "
      << join(generators, [](GraphModel m) { return std::string(to_string(m)); })
      << '\n';
  out << "sizes = "
      << join(sizes, [](std::size_t n) { return std::to_string(n); }) << '\n';
  out << "instances = " << instances_per_size << '\n';
  out << "initials = " << initials_per_graph << '\n';
  out << "initial_assignment = "
      << (initial_assignment == InitialAssignment::shared ? "shared" : "split")
      << '\n';
  out << "algorithms = "
      << join(algorithms, [](AlgorithmId a) { return std::string(to_string(a)); })
      << '\n';
  out << "zeta = " << to_string(zeta) << '\n';
  out << "alpha = " << format_double(alpha) << '\n';
  out << "budget = " << (budget ? std::to_string(*budget) : "unlimited")
      << '\n';
  out << "master_seed = " << master_seed << '\n';
  out << "er_p = " << (er_p ? format_double(*er_p) : "auto") << '\n';
  out << "ba_m = " << ba_m << '\n';
  return out.str();
}

struct SummaryRow {
  std::size_t n = 0;
  AlgorithmId algorithm = AlgorithmId::scp1;
  double mean_recruits = 0.0;
  double sd_recruits = 0.0;
  std::size_t runs = 0;            // runs included in the mean
  std::size_t exhausted_runs = 0;  // excluded from the mean
};

inline std::string graph_label(GraphModel model, std::size_t n,
                               std::size_t instance) {
  return std::string(to_string(model)) + "-n" + std::to_string(n) + "-i" +
         std::to_string(instance);
}

inline std::uint64_t instance_seed(const ExperimentConfig& cfg,
                                   GraphModel model, std::size_t n,
                                   std::size_t instance) {
  return split_seed(cfg.master_seed,
                    model == GraphModel::erdos_renyi ? 0 : 1, n, instance);
}

/// All runs for one generated graph instance, in (algorithm, initial slot)
/// order. Exposed separately so the per-instance seed can be overridden.
inline std::vector<RunRecord> run_instance(const ExperimentConfig& cfg,
                                           GraphModel model, std::size_t n,
                                           std::size_t instance,
                                           std::uint64_t inst_seed) {
  Graph graph = model == GraphModel::erdos_renyi
                    ? gen_erdos_renyi(
                          n, cfg.er_p ? *cfg.er_p : default_er_probability(n),
                          split_seed(inst_seed, 1))
                    : gen_barabasi_albert(n, cfg.ba_m, split_seed(inst_seed, 1));

  Rng init_rng(split_seed(inst_seed, 2));
  std::vector<NodeId> initials;
  NodeSet taken(n);
  while (initials.size() < cfg.initials_per_graph) {
    auto c = static_cast<NodeId>(init_rng.below(n));
    if (taken.insert(c)) initials.push_back(c);
  }

  std::vector<std::size_t> slots;
  if (cfg.initial_assignment == ExperimentConfig::InitialAssignment::shared)
    for (std::size_t s = 0; s < cfg.initials_per_graph; ++s)
      slots.push_back(s);
  else
    slots.push_back(instance % cfg.initials_per_graph);

  std::vector<RunRecord> records;
  records.reserve(cfg.algorithms.size() * slots.size());
  for (AlgorithmId algo : cfg.algorithms) {
    for (std::size_t slot : slots) {
      PolicyConfig pc;
      pc.algorithm = algo;
      pc.zeta = cfg.zeta;
      pc.alpha = cfg.alpha;
      pc.initial_node = initials[slot];
      pc.seed = split_seed(inst_seed, 3 + static_cast<std::uint64_t>(algo), slot);
      RunOptions opts;
      opts.budget = cfg.budget;
      RunRecord rec = run(graph, pc, natural_level(algo), opts);
      rec.graph_id = graph_label(model, n, instance);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

/// Every (size, instance, algorithm, initial) run of one generator model.
/// Output order is (size, instance, algorithm, initial slot) regardless of
/// the worker count.
inline std::vector<RunRecord> run_sweep(const ExperimentConfig& cfg,
                                        GraphModel model,
                                        std::size_t workers = 1) {
  cfg.validate();
  const std::size_t tasks = cfg.sizes.size() * cfg.instances_per_size;
  const std::size_t slots_per_instance =
      cfg.initial_assignment == ExperimentConfig::InitialAssignment::shared
          ? cfg.initials_per_graph
          : 1;
  const std::size_t runs_per_task = cfg.algorithms.size() * slots_per_instance;

  std::vector<RunRecord> records(tasks * runs_per_task);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (;;) {
      std::size_t task = next.fetch_add(1);
      if (task >= tasks) return;
      try {
        std::size_t si = task / cfg.instances_per_size;
        std::size_t instance = task % cfg.instances_per_size;
        std::size_t n = cfg.sizes[si];
        auto batch = run_instance(cfg, model, n, instance,
                                  instance_seed(cfg, model, n, instance));
        std::move(batch.begin(), batch.end(),
                  records.begin() + task * runs_per_task);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, tasks); ++w)
      pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

/// Mean and sample standard deviation of final recruit counts per
/// (n, algorithm). Exhausted runs are excluded from the mean and reported
/// in their own column.
inline std::vector<SummaryRow> aggregate(std::span<const RunRecord> records) {
  std::map<std::pair<std::size_t, int>, std::pair<std::vector<double>, std::size_t>>
      groups;
  for (const auto& rec : records) {
    auto& g = groups[{rec.n, static_cast<int>(rec.algorithm)}];
    if (rec.termination == Termination::exhausted)
      ++g.second;
    else
      g.first.push_back(static_cast<double>(rec.final_recruits));
  }
  std::vector<SummaryRow> rows;
  rows.reserve(groups.size());
  for (const auto& [key, g] : groups) {
    SummaryRow row;
    row.n = key.first;
    row.algorithm = static_cast<AlgorithmId>(key.second);
    row.runs = g.first.size();
    row.exhausted_runs = g.second;
    if (!g.first.empty()) {
      double sum = 0;
      for (double v : g.first) sum += v;
      row.mean_recruits = sum / static_cast<double>(g.first.size());
      if (g.first.size() > 1) {
        double ss = 0;
        for (double v : g.first) {
          double d = v - row.mean_recruits;
          ss += d * d;
        }
        row.sd_recruits =
            std::sqrt(ss / static_cast<double>(g.first.size() - 1));
      }
    }
    rows.push_back(row);
  }
  return rows;
}

/// ((mean_a - mean_b) / mean_b) * 100, averaged over the sizes where both
/// algorithms have a mean.
inline double gap_percent(std::span<const SummaryRow> rows, AlgorithmId a,
                          AlgorithmId b) {
  std::map<std::size_t, double> mean_a, mean_b;
  for (const auto& row : rows) {
    if (row.runs == 0) continue;
    if (row.algorithm == a) mean_a[row.n] = row.mean_recruits;
    if (row.algorithm == b) mean_b[row.n] = row.mean_recruits;
  }
  double total = 0;
  std::size_t count = 0;
  for (const auto& [n, ma] : mean_a) {
    auto it = mean_b.find(n);
    if (it == mean_b.end() || it->second == 0) continue;
    total += (ma - it->second) / it->second * 100.0;
    ++count;
  }
  if (count == 0)
    throw std::invalid_argument("gap_percent: no common sizes for " +
                                std::string(to_string(a)) + " vs " +
                                to_string(b));
  return total / static_cast<double>(count);
}

inline const char* summary_csv_header() {
  return "n,algorithm,mean_recruits,sd_recruits,runs,exhausted_runs";
}

inline void write_summary_csv(std::ostream& out,
                              std::span<const SummaryRow> rows) {
  out << summary_csv_header() << '\n';
  for (const auto& r : rows)
    out << r.n << ',' << to_string(r.algorithm) << ','
        << format_double(r.mean_recruits) << ',' << format_double(r.sd_recruits)
        << ',' << r.runs << ',' << r.exhausted_runs << '\n';
}

inline std::vector<SummaryRow> read_summary_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || detail::trim(line) != summary_csv_header())
    throw parse_error("summary csv: bad or missing header");
  std::vector<SummaryRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    auto fields = detail::split_list(line);
    if (fields.size() != 6)
      throw parse_error("summary csv line " + std::to_string(lineno) +
                        ": expected 6 fields");
    SummaryRow r;
    r.n = detail::parse_u64(fields[0]);
    r.algorithm = algorithm_from_string(fields[1]);
    r.mean_recruits = detail::parse_double(fields[2]);
    r.sd_recruits = detail::parse_double(fields[3]);
    r.runs = detail::parse_u64(fields[4]);
    r.exhausted_runs = detail::parse_u64(fields[5]);
    rows.push_back(r);
  }
  return rows;
}

inline const char* detail_csv_header() {
  return "graph_id,seed,algorithm,initial_node,final_recruits,termination,"
         "illegal_queries";
}

inline void write_detail_csv(std::ostream& out,
                             std::span<const RunRecord> records) {
  out << detail_csv_header() << '\n';
  for (const auto& rec : records) {
    out << rec.graph_id << ',' << rec.seed << ',' << to_string(rec.algorithm)
        << ',';
    if (rec.initial_node)
      out << *rec.initial_node;
    else
      out << '-';
    out << ',' << rec.final_recruits << ',' << to_string(rec.termination)
        << ',' << rec.audit.total_illegal() << '\n';
  }
}

/// One series per algorithm: x = n, y = mean recruits, error = +/-1 sd.
inline std::vector<PlotSeries> summary_to_series(
    std::span<const SummaryRow> rows) {
  std::vector<PlotSeries> series;
  for (AlgorithmId a : all_algorithms) {
    PlotSeries s;
    s.label = to_string(a);
    for (const auto& row : rows) {
      if (row.algorithm != a || row.runs == 0) continue;
      s.x.push_back(static_cast<double>(row.n));
      s.y.push_back(row.mean_recruits);
      s.yerr.push_back(row.sd_recruits);
    }
    if (!s.x.empty()) series.push_back(std::move(s));
  }
  return series;
}

inline void emit_plot(std::ostream& out, std::span<const SummaryRow> rows,
                      const std::string& title) {
  auto series = summary_to_series(rows);
  write_svg_plot(out, title, "number of nodes",
                 "mean recruits to full cover", series);
}

}  // namespace netcover
