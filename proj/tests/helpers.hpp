#pragma once

// Shared fixtures: tiny named graphs and independent oracles used to
// cross-check the library implementations.

#include <numeric>
#include <utility>
#include <vector>

#include "netcover/generators.hpp"
#include "netcover/graph.hpp"
#include "netcover/rng.hpp"

namespace testutil {

using netcover::Graph;
using netcover::NodeId;

inline Graph make_path(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

inline Graph make_cycle(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, static_cast<NodeId>(n - 1));
  return Graph::from_edges(n, edges);
}

inline Graph make_complete(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// Star with center 0 and the given number of leaves 1..leaves.
inline Graph make_star(std::size_t leaves) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

/// Triangle 0-1-2 plus the path 2-3-4.
inline Graph make_lollipop() {
  return Graph::from_edges(
      5, std::vector<std::pair<NodeId, NodeId>>{
             {0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
}

/// An ER graph that is connected, retrying over seeds.
inline Graph connected_er(std::size_t n, double p, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Graph g = netcover::gen_erdos_renyi(
        n, p, netcover::split_seed(seed, attempt));
    if (netcover::is_connected(g)) return g;
  }
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

/// Connectivity of an induced subgraph via union-find, independent of the
/// BFS in the library.
inline bool connected_subset_oracle(const Graph& g,
                                    const std::vector<NodeId>& s) {
  if (s.empty()) return false;
  std::vector<char> in_s(g.node_count(), 0);
  for (NodeId i : s) in_s[i] = 1;
  UnionFind uf(g.node_count());
  for (auto [u, v] : g.edges())
    if (in_s[u] && in_s[v]) uf.unite(u, v);
  for (NodeId i : s)
    if (uf.find(i) != uf.find(s.front())) return false;
  return true;
}

}  // namespace testutil
