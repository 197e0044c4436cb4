#pragma once

// Seeded random-graph generators: Erdos-Renyi G(n, p) and the
// Barabasi-Albert preferential-attachment model. Pure functions of their
// spec, deterministic per seed.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "netcover/graph.hpp"
#include "netcover/rng.hpp"

namespace netcover {

enum class GraphModel { erdos_renyi, barabasi_albert };

inline const char* to_string(GraphModel m) {
  return m == GraphModel::erdos_renyi ? "er" : "ba";
}

inline GraphModel graph_model_from_string(const std::string& s) {
  if (s == "er" || s == "erdos-renyi") return GraphModel::erdos_renyi;
  if (s == "ba" || s == "barabasi-albert") return GraphModel::barabasi_albert;
  throw std::invalid_argument("unknown graph model: " + s);
}

struct GenSpec {
  GraphModel model = GraphModel::erdos_renyi;
  std::size_t n = 0;
  double p = 0.0;                  // ER only
  std::size_t edges_per_vertex = 2;  // BA only
  std::uint64_t seed = 0;
};

/// The edge probability used throughout the experiments: min(1, 2 ln(n)/n),
/// which keeps G(n, p) connected with high probability.
inline double default_er_probability(std::size_t n) {
  if (n < 2)
    throw std::domain_error("default_er_probability requires n >= 2");
  return std::min(1.0, 2.0 * std::log(static_cast<double>(n)) /
                           static_cast<double>(n));
}

/// G(n, p): each unordered pair {i, j} is an edge independently with
/// probability p. Pairs are visited in the fixed order (0,1), (0,2), ...,
/// (0,n-1), (1,2), ... so the output is a pure function of (n, p, seed).
inline Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_erdos_renyi: n must be >= 1");
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("gen_erdos_renyi: p must be in [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i + 1 < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (rng.next_double() < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// Barabasi-Albert growth starting from a single vertex. Each new vertex
/// attaches edges_per_vertex edges to distinct existing vertices, chosen
/// proportionally to their current degree. While every existing vertex
/// still has degree zero the choice is uniform, and when fewer than
/// edges_per_vertex earlier vertices exist the new vertex connects to all
/// of them; both rules keep the graph simple.
inline Graph gen_barabasi_albert(std::size_t n, std::size_t edges_per_vertex,
                                 std::uint64_t seed) {
  if (n < 1)
    throw std::invalid_argument("gen_barabasi_albert: n must be >= 1");
  if (edges_per_vertex < 1)
    throw std::invalid_argument(
        "gen_barabasi_albert: edges_per_vertex must be >= 1");
  Rng rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::uint64_t> degree(n, 0);
  std::vector<NodeId> picked;
  for (NodeId v = 1; v < n; ++v) {
    picked.clear();
    if (v <= edges_per_vertex) {
      for (NodeId u = 0; u < v; ++u) picked.push_back(u);
    } else {
      std::uint64_t total =
          std::accumulate(degree.begin(), degree.begin() + v, std::uint64_t{0});
      std::vector<char> chosen(v, 0);
      while (picked.size() < edges_per_vertex) {
        NodeId target;
        if (total == 0) {
          // uniform among the not-yet-chosen earlier vertices
          std::uint64_t idx = rng.below(v - picked.size());
          target = 0;
          for (NodeId u = 0;; ++u) {
            if (chosen[u]) continue;
            if (idx-- == 0) {
              target = u;
              break;
            }
          }
        } else {
          std::uint64_t r = rng.below(total);
          std::uint64_t acc = 0;
          target = 0;
          for (NodeId u = 0; u < v; ++u) {
            if (chosen[u]) continue;
            acc += degree[u];
            if (r < acc) {
              target = u;
              break;
            }
          }
        }
        chosen[target] = 1;
        total -= degree[target];
        picked.push_back(target);
      }
    }
    for (NodeId u : picked) {
      edges.emplace_back(u, v);
      ++degree[u];
      ++degree[v];
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph generate(const GenSpec& spec) {
  if (spec.model == GraphModel::erdos_renyi)
    return gen_erdos_renyi(spec.n, spec.p, spec.seed);
  return gen_barabasi_albert(spec.n, spec.edges_per_vertex, spec.seed);
}

}  // namespace netcover
