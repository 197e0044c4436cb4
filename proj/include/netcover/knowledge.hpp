#pragma once

// The five information levels, enforced as a view: every observation a
// recruiting policy makes goes through KnowledgeView, which answers the
// query and records whether it was legal under the declared level. In
// advisory mode illegal queries are logged and still answered so a run can
// complete; in strict mode the first illegal query aborts the run.

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netcover/graph.hpp"

namespace netcover {

enum class KnowledgeLevel {
  node_list,           // knows V; recruited nodes reveal their neighbors
  one_hop,             // knows one node; recruits reveal their neighbors
  two_hop,             // recruits reveal neighbors and neighbors-of-neighbors
  node_list_two_hop,   // node list plus two-hop lookahead
  full,                // knows V and E
};

inline const char* to_string(KnowledgeLevel level) {
  switch (level) {
    case KnowledgeLevel::node_list: return "node-list";
    case KnowledgeLevel::one_hop: return "one-hop";
    case KnowledgeLevel::two_hop: return "two-hop";
    case KnowledgeLevel::node_list_two_hop: return "node-list-two-hop";
    case KnowledgeLevel::full: return "full";
  }
  return "?";
}

inline KnowledgeLevel knowledge_level_from_string(const std::string& s) {
  if (s == "node-list") return KnowledgeLevel::node_list;
  if (s == "one-hop") return KnowledgeLevel::one_hop;
  if (s == "two-hop") return KnowledgeLevel::two_hop;
  if (s == "node-list-two-hop") return KnowledgeLevel::node_list_two_hop;
  if (s == "full") return KnowledgeLevel::full;
  throw std::invalid_argument("unknown knowledge level: " + s);
}

enum class QueryKind {
  recruit,
  observed_degree,
  excess_degree,
  frontier,
  two_hop_frontier,
  uncovered_set,
  degree_weights,
};
inline constexpr std::size_t query_kind_count = 7;

inline const char* to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::recruit: return "recruit";
    case QueryKind::observed_degree: return "observed_degree";
    case QueryKind::excess_degree: return "excess_degree";
    case QueryKind::frontier: return "frontier";
    case QueryKind::two_hop_frontier: return "two_hop_frontier";
    case QueryKind::uncovered_set: return "uncovered_set";
    case QueryKind::degree_weights: return "degree_weights";
  }
  return "?";
}

struct AccessEvent {
  std::size_t step;   // t = |R| at query time
  QueryKind kind;
  NodeId node;        // no_node for whole-set queries
  bool legal;
};

struct AuditSummary {
  std::array<std::size_t, query_kind_count> legal{};
  std::array<std::size_t, query_kind_count> illegal{};

  std::size_t total_illegal() const {
    std::size_t sum = 0;
    for (auto c : illegal) sum += c;
    return sum;
  }
  bool clean() const { return total_illegal() == 0; }

  /// ζ2 used below full knowledge: a documented relaxation, not an
  /// implementation bug.
  bool degree_weight_relaxation() const {
    return illegal[static_cast<std::size_t>(QueryKind::degree_weights)] > 0;
  }

  std::string to_string() const {
    std::ostringstream out;
    out << "audit: " << (clean() ? "clean" : "violations");
    for (std::size_t k = 0; k < query_kind_count; ++k) {
      if (legal[k] == 0 && illegal[k] == 0) continue;
      out << ' ' << netcover::to_string(static_cast<QueryKind>(k)) << '='
          << legal[k];
      if (illegal[k] > 0) out << "+" << illegal[k] << "illegal";
    }
    if (degree_weight_relaxation())
      out << " (degree-weighted sampling below full knowledge)";
    return out.str();
  }
};

class audit_violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class KnowledgeView {
 public:
  KnowledgeView(const Graph& g, KnowledgeLevel level,
                std::optional<NodeId> initial = std::nullopt,
                bool strict = false)
      : g_(&g),
        level_(level),
        strict_(strict),
        initial_(initial),
        recruited_(g.node_count()),
        covered_(g.node_count()),
        revealed_(g.node_count(), reveals_all(level)) {
    if (initial_ && *initial_ >= g.node_count())
      throw std::out_of_range("initial node out of range");
    if (initial_ && !reveals_all(level)) revealed_.insert(*initial_);
  }

  KnowledgeLevel level() const { return level_; }
  std::optional<NodeId> initial_node() const { return initial_; }
  const NodeSet& recruited() const { return recruited_; }
  const NodeSet& covered() const { return covered_; }
  const NodeSet& revealed() const { return revealed_; }
  std::size_t step() const { return recruited_.size(); }

  /// Recruit i and grow the revealed set per the level contract. Recruiting
  /// a node the level has not revealed is an audit violation.
  void recruit(NodeId i) {
    check_node(i);
    if (recruited_.contains(i))
      throw std::invalid_argument("node " + std::to_string(i) +
                                  " already recruited");
    bool legal = revealed_.contains(i) ||
                 (recruited_.empty() && initial_ && *initial_ == i);
    record(QueryKind::recruit, i, legal);
    recruited_.insert(i);
    covered_.insert(i);
    for (NodeId j : g_->neighbors(i)) covered_.insert(j);
    reveal_around(i);
  }

  /// d_obs(i, t): neighbors of i that are recruited or neighbors of
  /// recruits.
  std::size_t observed_degree(NodeId i) {
    check_node(i);
    record(QueryKind::observed_degree, i, revealed_.contains(i));
    return observed_degree_raw(*g_, covered_, i);
  }

  /// d(i) - d_obs(i, t): the marginal coverage gain of recruiting i.
  std::size_t excess_degree(NodeId i) {
    check_node(i);
    record(QueryKind::excess_degree, i, revealed_.contains(i));
    return g_->degree(i) - observed_degree_raw(*g_, covered_, i);
  }

  /// P = N(R) \ R. Legal at every level: recruits always report their
  /// neighbors.
  std::vector<NodeId> frontier() {
    record(QueryKind::frontier, no_node, true);
    std::vector<NodeId> out;
    for (NodeId i = 0; i < g_->node_count(); ++i)
      if (!recruited_.contains(i) && covered_.contains(i)) out.push_back(i);
    return out;
  }

  /// uncovered ∩ [N(R) ∪ N(N(R))], ascending; empty while R is empty.
  /// Requires a two-hop lookahead.
  std::vector<NodeId> two_hop_frontier(const NodeSet& uncovered) {
    bool legal = level_ == KnowledgeLevel::two_hop ||
                 level_ == KnowledgeLevel::node_list_two_hop ||
                 level_ == KnowledgeLevel::full;
    record(QueryKind::two_hop_frontier, no_node, legal);
    auto hop1 = neighbors_of_set(*g_, recruited_.to_vector());
    auto hop2 = neighbors_of_set(*g_, hop1);
    NodeSet reach(g_->node_count());
    for (NodeId j : hop1) reach.insert(j);
    for (NodeId j : hop2) reach.insert(j);
    std::vector<NodeId> out;
    for (NodeId j : reach.to_vector())
      if (uncovered.contains(j)) out.push_back(j);
    return out;
  }

  /// U = V \ C, ascending. Requires knowing the node list.
  std::vector<NodeId> uncovered_nodes() {
    bool legal = level_ == KnowledgeLevel::node_list ||
                 level_ == KnowledgeLevel::node_list_two_hop ||
                 level_ == KnowledgeLevel::full;
    record(QueryKind::uncovered_set, no_node, legal);
    return covered_.complement_vector();
  }

  /// True degrees of the candidates, for degree-proportional sampling.
  /// Level-clean only under full knowledge; elsewhere it is answered but
  /// flagged as a relaxation.
  std::vector<std::size_t> degree_weights(std::span<const NodeId> candidates) {
    record(QueryKind::degree_weights, no_node,
           level_ == KnowledgeLevel::full);
    std::vector<std::size_t> w;
    w.reserve(candidates.size());
    for (NodeId i : candidates) w.push_back(g_->degree(i));
    return w;
  }

  const std::vector<AccessEvent>& audit_log() const { return audit_; }

  AuditSummary audit_summary() const {
    AuditSummary s;
    for (const auto& e : audit_)
      ++(e.legal ? s.legal : s.illegal)[static_cast<std::size_t>(e.kind)];
    return s;
  }

  /// d_obs without a view: |{ j in covered : {i,j} in E }| where covered
  /// must equal R ∪ N(R). Shared with tests and the invariant checks.
  static std::size_t observed_degree_raw(const Graph& g,
                                         const NodeSet& covered, NodeId i) {
    std::size_t count = 0;
    for (NodeId j : g.neighbors(i))
      if (covered.contains(j)) ++count;
    return count;
  }

 private:
  static bool reveals_all(KnowledgeLevel level) {
    return level == KnowledgeLevel::node_list ||
           level == KnowledgeLevel::node_list_two_hop ||
           level == KnowledgeLevel::full;
  }

  void check_node(NodeId i) const {
    if (i >= g_->node_count())
      throw std::out_of_range("node " + std::to_string(i) + " out of range");
  }

  void record(QueryKind kind, NodeId node, bool legal) {
    audit_.push_back({step(), kind, node, legal});
    if (strict_ && !legal)
      throw audit_violation(std::string("illegal ") + netcover::to_string(kind) +
                            (node == no_node
                                 ? std::string()
                                 : " of node " + std::to_string(node)) +
                            " at level " + netcover::to_string(level_) +
                            ", step " + std::to_string(step()));
  }

  void reveal_around(NodeId i) {
    switch (level_) {
      case KnowledgeLevel::node_list:
      case KnowledgeLevel::node_list_two_hop:
      case KnowledgeLevel::full:
        return;  // everything already revealed
      case KnowledgeLevel::one_hop:
        revealed_.insert(i);
        for (NodeId j : g_->neighbors(i)) revealed_.insert(j);
        return;
      case KnowledgeLevel::two_hop:
        revealed_.insert(i);
        for (NodeId j : g_->neighbors(i)) {
          revealed_.insert(j);
          for (NodeId k : g_->neighbors(j)) revealed_.insert(k);
        }
        return;
    }
  }

  const Graph* g_;
  KnowledgeLevel level_;
  bool strict_;
  std::optional<NodeId> initial_;
  NodeSet recruited_;
  NodeSet covered_;
  NodeSet revealed_;
  std::vector<AccessEvent> audit_;
};

}  // namespace netcover
