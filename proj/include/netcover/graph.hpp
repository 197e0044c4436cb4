#pragma once

// Immutable undirected simple graph over dense integer node ids, plus the
// set-level neighborhood operations the recruiting algorithms are built on.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace netcover {

using NodeId = std::uint32_t;

/// Sentinel for "no node" in audit events and similar contexts.
inline constexpr NodeId no_node = static_cast<NodeId>(-1);

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense membership set over the node ids [0, universe).
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe, bool filled = false)
      : member_(universe, filled ? 1 : 0), size_(filled ? universe : 0) {}

  std::size_t universe() const { return member_.size(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(NodeId i) const { return member_[i] != 0; }

  /// Returns true when i was not already a member.
  bool insert(NodeId i) {
    if (member_[i]) return false;
    member_[i] = 1;
    ++size_;
    return true;
  }

  bool erase(NodeId i) {
    if (!member_[i]) return false;
    member_[i] = 0;
    --size_;
    return true;
  }

  /// Members in ascending order.
  std::vector<NodeId> to_vector() const {
    std::vector<NodeId> out;
    out.reserve(size_);
    for (NodeId i = 0; i < member_.size(); ++i)
      if (member_[i]) out.push_back(i);
    return out;
  }

  /// Non-members in ascending order.
  std::vector<NodeId> complement_vector() const {
    std::vector<NodeId> out;
    out.reserve(member_.size() - size_);
    for (NodeId i = 0; i < member_.size(); ++i)
      if (!member_[i]) out.push_back(i);
    return out;
  }

  bool operator==(const NodeSet&) const = default;

 private:
  std::vector<char> member_;
  std::size_t size_ = 0;
};

/// Undirected simple graph; adjacency lists are sorted ascending and stay
/// fixed after construction, so instances can be shared across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
  /// (in either orientation) and endpoints outside [0, n).
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<NodeId, NodeId>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::out_of_range("edge endpoint " +
                                std::to_string(std::max(u, v)) +
                                " out of range [0, " + std::to_string(n) + ")");
      if (u == v)
        throw std::invalid_argument("self-loop at node " + std::to_string(u));
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
        throw std::invalid_argument("duplicate edge in edge list");
    }
    g.edges_ = edges.size();
    return g;
  }

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  /// N(i): sorted ascending, never contains i itself.
  const std::vector<NodeId>& neighbors(NodeId i) const {
    check_node(i);
    return adj_[i];
  }

  std::size_t degree(NodeId i) const {
    check_node(i);
    return adj_[i].size();
  }

  bool has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Canonical edge list: (min,max) pairs in ascending order.
  std::vector<std::pair<NodeId, NodeId>> edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edges_);
    for (NodeId i = 0; i < adj_.size(); ++i)
      for (NodeId j : adj_[i])
        if (j > i) out.emplace_back(i, j);
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_node(NodeId i) const {
    if (i >= adj_.size())
      throw std::out_of_range("node " + std::to_string(i) +
                              " out of range (graph has " +
                              std::to_string(adj_.size()) + " nodes)");
  }

  std::vector<std::vector<NodeId>> adj_;
  std::size_t edges_ = 0;
};

/// N(A) = { j in V \ A : some i in A has {i,j} in E }. Ascending, disjoint
/// from A.
inline std::vector<NodeId> neighbors_of_set(const Graph& g,
                                            std::span<const NodeId> a) {
  NodeSet in_a(g.node_count());
  for (NodeId i : a) {
    if (i >= g.node_count())
      throw std::out_of_range("node " + std::to_string(i) + " out of range");
    in_a.insert(i);
  }
  NodeSet out(g.node_count());
  for (NodeId i : a)
    for (NodeId j : g.neighbors(i))
      if (!in_a.contains(j)) out.insert(j);
  return out.to_vector();
}

/// True iff the subgraph induced by s is connected. s must be non-empty.
inline bool is_connected_subset(const Graph& g, std::span<const NodeId> s) {
  if (s.empty())
    throw std::invalid_argument("is_connected_subset: empty node set");
  NodeSet in_s(g.node_count());
  for (NodeId i : s) {
    if (i >= g.node_count())
      throw std::out_of_range("node " + std::to_string(i) + " out of range");
    in_s.insert(i);
  }
  // BFS restricted to edges with both endpoints in s.
  std::vector<NodeId> queue{s.front()};
  NodeSet seen(g.node_count());
  seen.insert(s.front());
  while (!queue.empty()) {
    NodeId u = queue.back();
    queue.pop_back();
    for (NodeId v : g.neighbors(u))
      if (in_s.contains(v) && seen.insert(v)) queue.push_back(v);
  }
  return seen.size() == in_s.size();
}

inline bool is_connected(const Graph& g) {
  if (g.node_count() <= 1) return true;
  std::vector<NodeId> all(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) all[i] = i;
  return is_connected_subset(g, all);
}

// Edge-list text format: first line "n m", then m lines "u v", 0-indexed.
// The canonical form written by write_edge_list has u < v and lines sorted
// ascending; the loader also accepts reversed endpoints and unsorted lines.
inline Graph load_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) -> parse_error {
    return parse_error("edge list line " + std::to_string(lineno) + ": " +
                       what);
  };

  if (!std::getline(in, line)) throw parse_error("edge list: empty input");
  ++lineno;
  std::istringstream header(line);
  std::size_t n = 0, m = 0;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra))
    throw fail("expected header \"n m\"");

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  while (edges.size() < m) {
    if (!std::getline(in, line))
      throw parse_error("edge list: expected " + std::to_string(m) +
                        " edges, got " + std::to_string(edges.size()));
    ++lineno;
    std::istringstream ls(line);
    long long u = -1, v = -1;
    if (!(ls >> u >> v) || (ls >> extra)) throw fail("expected \"u v\"");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n)
      throw fail("node id out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw fail("self-loop " + std::to_string(u));
    auto a = static_cast<NodeId>(std::min(u, v));
    auto b = static_cast<NodeId>(std::max(u, v));
    if (!seen.insert(static_cast<std::uint64_t>(a) * n + b).second)
      throw fail("duplicate edge " + std::to_string(a) + " " +
                 std::to_string(b));
    edges.emplace_back(a, b);
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw fail("trailing content after " + std::to_string(m) + " edges");
  }
  return Graph::from_edges(n, edges);
}

inline Graph load_edge_list(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

}  // namespace netcover
