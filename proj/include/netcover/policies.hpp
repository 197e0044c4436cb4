#pragma once

// The six recruiting policies, each a step function over SimState +
// KnowledgeView, and the run loop that drives any of them to termination.
//
//   scp1  random recruit over the uncovered nodes          (node list)
//   scp2  two-hops greedy, max excess degree on the
//         uncovered two-hop frontier                       (two-hop)
//   scp3  Bernoulli(alpha) mixture of scp1 and scp2        (node list + two-hop)
//   scp4  greedy, max excess degree over all uncovered     (full knowledge)
//   mcc1  uniform recruit over the frontier N(R) \ R       (one-hop)
//   mcc2  max excess degree over the frontier              (one-hop)
//
// Ties in every argmax go to the smallest node id so runs are reproducible.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "netcover/graph.hpp"
#include "netcover/knowledge.hpp"
#include "netcover/rng.hpp"

namespace netcover {

enum class AlgorithmId { scp1, scp2, scp3, scp4, mcc1, mcc2 };
inline constexpr AlgorithmId all_algorithms[] = {
    AlgorithmId::scp1, AlgorithmId::scp2, AlgorithmId::scp3,
    AlgorithmId::scp4, AlgorithmId::mcc1, AlgorithmId::mcc2};

inline const char* to_string(AlgorithmId a) {
  switch (a) {
    case AlgorithmId::scp1: return "scp1";
    case AlgorithmId::scp2: return "scp2";
    case AlgorithmId::scp3: return "scp3";
    case AlgorithmId::scp4: return "scp4";
    case AlgorithmId::mcc1: return "mcc1";
    case AlgorithmId::mcc2: return "mcc2";
  }
  return "?";
}

inline AlgorithmId algorithm_from_string(const std::string& s) {
  for (AlgorithmId a : all_algorithms)
    if (s == to_string(a)) return a;
  throw std::invalid_argument("unknown algorithm: " + s);
}

/// The knowledge level each policy was designed for.
inline KnowledgeLevel natural_level(AlgorithmId a) {
  switch (a) {
    case AlgorithmId::scp1: return KnowledgeLevel::node_list;
    case AlgorithmId::scp2: return KnowledgeLevel::two_hop;
    case AlgorithmId::scp3: return KnowledgeLevel::node_list_two_hop;
    case AlgorithmId::scp4: return KnowledgeLevel::full;
    case AlgorithmId::mcc1:
    case AlgorithmId::mcc2: return KnowledgeLevel::one_hop;
  }
  return KnowledgeLevel::full;
}

/// Policies whose first recruit is a fixed starting node.
inline bool uses_initial_node(AlgorithmId a) {
  return a == AlgorithmId::scp2 || a == AlgorithmId::mcc1 ||
         a == AlgorithmId::mcc2;
}

enum class Zeta { uniform, degree };

inline const char* to_string(Zeta z) {
  return z == Zeta::uniform ? "uniform" : "degree";
}

inline Zeta zeta_from_string(const std::string& s) {
  if (s == "uniform") return Zeta::uniform;
  if (s == "degree") return Zeta::degree;
  throw std::invalid_argument("unknown zeta distribution: " + s);
}

enum class Termination { full_cover, budget, exhausted };

inline const char* to_string(Termination t) {
  switch (t) {
    case Termination::full_cover: return "full_cover";
    case Termination::budget: return "budget";
    case Termination::exhausted: return "exhausted";
  }
  return "?";
}

struct PolicyConfig {
  AlgorithmId algorithm = AlgorithmId::scp1;
  Zeta zeta = Zeta::uniform;
  double alpha = 0.5;  // scp3: probability of the random branch
  std::optional<NodeId> initial_node;
  std::uint64_t seed = 0;
};

/// Ground-truth simulation state, kept by the harness. The policies only
/// read it through their KnowledgeView; invariants C = R ∪ N(R) and
/// U = V \ C hold after every step.
struct SimState {
  explicit SimState(const Graph& g)
      : recruited(g.node_count()),
        covered(g.node_count()),
        uncovered(g.node_count(), true) {}

  NodeSet recruited;  // R
  NodeSet covered;    // C
  NodeSet uncovered;  // U
  std::vector<NodeId> order;

  std::size_t step() const { return order.size(); }  // t = |R|
};

struct StepOutcome {
  std::optional<NodeId> recruited;  // nullopt: no legal candidate left
  std::vector<NodeId> newly_covered;

  // scp3 instrumentation: which branch the Bernoulli chose vs executed
  enum class Branch { none, random_pick, greedy_pick };
  Branch branch = Branch::none;
  bool fell_through = false;
};

/// Draw one candidate: uniform, or proportional to true degree (restricted
/// to the candidate set). All-zero degree weights fall back to uniform.
inline NodeId sample_zeta(std::span<const NodeId> candidates, Zeta zeta,
                          KnowledgeView& view, Rng& rng) {
  if (candidates.empty())
    throw std::invalid_argument("sample_zeta: empty candidate set");
  if (zeta == Zeta::degree) {
    auto weights = view.degree_weights(candidates);
    std::uint64_t total = 0;
    for (auto w : weights) total += w;
    if (total > 0) {
      std::uint64_t r = rng.below(total);
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        acc += weights[k];
        if (r < acc) return candidates[k];
      }
    }
  }
  return candidates[rng.below(candidates.size())];
}

/// Recruit i in both bookkeepers; returns the newly covered nodes.
inline std::vector<NodeId> apply_recruit(const Graph& g, SimState& state,
                                         KnowledgeView& view, NodeId i) {
  view.recruit(i);
  std::vector<NodeId> newly;
  if (state.covered.insert(i)) newly.push_back(i);
  for (NodeId j : g.neighbors(i))
    if (state.covered.insert(j)) newly.push_back(j);
  for (NodeId j : newly) state.uncovered.erase(j);
  state.recruited.insert(i);
  state.order.push_back(i);
  return newly;
}

namespace detail {

/// Smallest-id argmax of excess degree over an ascending candidate list.
inline NodeId max_excess_candidate(std::span<const NodeId> candidates,
                                   KnowledgeView& view) {
  NodeId best = candidates.front();
  std::size_t best_excess = view.excess_degree(best);
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    std::size_t e = view.excess_degree(candidates[k]);
    if (e > best_excess) {
      best = candidates[k];
      best_excess = e;
    }
  }
  return best;
}

inline StepOutcome recruit_initial(const Graph& g, SimState& state,
                                   KnowledgeView& view,
                                   const PolicyConfig& cfg) {
  NodeId init = cfg.initial_node.value();
  StepOutcome out;
  out.recruited = init;
  out.newly_covered = apply_recruit(g, state, view, init);
  return out;
}

}  // namespace detail

/// SCP 1: recruit an uncovered node at random (per zeta).
inline StepOutcome scp1_step(const Graph& g, SimState& state,
                             KnowledgeView& view, Rng& rng,
                             const PolicyConfig& cfg) {
  auto uncovered = view.uncovered_nodes();
  if (uncovered.empty()) return {};
  StepOutcome out;
  NodeId i = sample_zeta(uncovered, cfg.zeta, view, rng);
  out.recruited = i;
  out.newly_covered = apply_recruit(g, state, view, i);
  return out;
}

/// SCP 2: two-hops greedy. Recruit the uncovered node within two hops of R
/// with maximum excess degree; the very first recruit is the configured
/// initial node.
inline StepOutcome scp2_step(const Graph& g, SimState& state,
                             KnowledgeView& view, Rng& rng,
                             const PolicyConfig& cfg) {
  (void)rng;
  if (state.recruited.empty()) return detail::recruit_initial(g, state, view, cfg);
  auto frontier = view.two_hop_frontier(state.uncovered);
  if (frontier.empty()) return {};
  StepOutcome out;
  NodeId i = detail::max_excess_candidate(frontier, view);
  out.recruited = i;
  out.newly_covered = apply_recruit(g, state, view, i);
  return out;
}

/// SCP 3: with probability alpha take the scp1 random recruit, otherwise
/// the scp2 greedy recruit; an empty branch falls through to the other.
inline StepOutcome scp3_step(const Graph& g, SimState& state,
                             KnowledgeView& view, Rng& rng,
                             const PolicyConfig& cfg) {
  const bool want_random = rng.bernoulli(cfg.alpha);

  auto try_random = [&](StepOutcome& out) {
    auto uncovered = view.uncovered_nodes();
    if (uncovered.empty()) return false;
    NodeId i = sample_zeta(uncovered, cfg.zeta, view, rng);
    out.recruited = i;
    out.newly_covered = apply_recruit(g, state, view, i);
    out.branch = StepOutcome::Branch::random_pick;
    return true;
  };
  auto try_greedy = [&](StepOutcome& out) {
    auto frontier = view.two_hop_frontier(state.uncovered);
    if (frontier.empty()) return false;
    NodeId i = detail::max_excess_candidate(frontier, view);
    out.recruited = i;
    out.newly_covered = apply_recruit(g, state, view, i);
    out.branch = StepOutcome::Branch::greedy_pick;
    return true;
  };

  StepOutcome out;
  if (want_random) {
    if (!try_random(out) && try_greedy(out)) out.fell_through = true;
  } else {
    if (!try_greedy(out) && try_random(out)) out.fell_through = true;
  }
  return out;
}

/// SCP 4: full-knowledge greedy, max excess degree over all uncovered nodes.
inline StepOutcome scp4_step(const Graph& g, SimState& state,
                             KnowledgeView& view, Rng& rng,
                             const PolicyConfig& cfg) {
  (void)rng;
  (void)cfg;
  auto uncovered = view.uncovered_nodes();
  if (uncovered.empty()) return {};
  StepOutcome out;
  NodeId i = detail::max_excess_candidate(uncovered, view);
  out.recruited = i;
  out.newly_covered = apply_recruit(g, state, view, i);
  return out;
}

/// MCC 1: uniform recruit over the frontier P = N(R) \ R, keeping R
/// connected; the first recruit is the configured initial node.
inline StepOutcome mcc1_step(const Graph& g, SimState& state,
                             KnowledgeView& view, Rng& rng,
                             const PolicyConfig& cfg) {
  if (state.recruited.empty()) return detail::recruit_initial(g, state, view, cfg);
  auto frontier = view.frontier();
  if (frontier.empty()) return {};
  StepOutcome out;
  NodeId j = frontier[rng.below(frontier.size())];
  out.recruited = j;
  out.newly_covered = apply_recruit(g, state, view, j);
  return out;
}

/// MCC 2: online myopic greedy; recruit the frontier node with maximum
/// excess degree.
inline StepOutcome mcc2_step(const Graph& g, SimState& state,
                             KnowledgeView& view, Rng& rng,
                             const PolicyConfig& cfg) {
  (void)rng;
  if (state.recruited.empty()) return detail::recruit_initial(g, state, view, cfg);
  auto frontier = view.frontier();
  if (frontier.empty()) return {};
  StepOutcome out;
  NodeId i = detail::max_excess_candidate(frontier, view);
  out.recruited = i;
  out.newly_covered = apply_recruit(g, state, view, i);
  return out;
}

inline StepOutcome policy_step(AlgorithmId a, const Graph& g, SimState& state,
                               KnowledgeView& view, Rng& rng,
                               const PolicyConfig& cfg) {
  switch (a) {
    case AlgorithmId::scp1: return scp1_step(g, state, view, rng, cfg);
    case AlgorithmId::scp2: return scp2_step(g, state, view, rng, cfg);
    case AlgorithmId::scp3: return scp3_step(g, state, view, rng, cfg);
    case AlgorithmId::scp4: return scp4_step(g, state, view, rng, cfg);
    case AlgorithmId::mcc1: return mcc1_step(g, state, view, rng, cfg);
    case AlgorithmId::mcc2: return mcc2_step(g, state, view, rng, cfg);
  }
  throw std::logic_error("unreachable");
}

struct RunRecord {
  std::string graph_id;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  AlgorithmId algorithm = AlgorithmId::scp1;
  KnowledgeLevel level = KnowledgeLevel::full;
  std::optional<NodeId> initial_node;
  std::vector<std::size_t> cover_sizes;  // |C| after each recruit
  std::vector<NodeId> recruit_order;
  std::size_t final_recruits = 0;
  Termination termination = Termination::full_cover;
  AuditSummary audit;
  double wall_ms = 0.0;
};

using StepObserver =
    std::function<void(const SimState&, const KnowledgeView&, const StepOutcome&)>;

struct RunOptions {
  std::optional<std::size_t> budget;  // max recruits; nullopt = unlimited
  bool strict_audit = false;
  StepObserver observer;  // called after every recruit
};

/// Drive one policy to termination: full cover, budget reached, or no legal
/// candidate left (disconnected remainder). Deterministic for a fixed
/// (graph, config, level, options.budget).
inline RunRecord run(const Graph& g, const PolicyConfig& cfg,
                     KnowledgeLevel level, const RunOptions& options = {}) {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);

  PolicyConfig effective = cfg;
  if (uses_initial_node(cfg.algorithm) && !effective.initial_node &&
      g.node_count() > 0) {
    // Setup fallback when no starting node was configured: drawn uniformly
    // before the run, from the run's own stream.
    effective.initial_node = static_cast<NodeId>(rng.below(g.node_count()));
  }

  SimState state(g);
  KnowledgeView view(g, level,
                     uses_initial_node(cfg.algorithm)
                         ? effective.initial_node
                         : std::nullopt,
                     options.strict_audit);

  RunRecord rec;
  rec.n = g.node_count();
  rec.seed = cfg.seed;
  rec.algorithm = cfg.algorithm;
  rec.level = level;
  if (uses_initial_node(cfg.algorithm)) rec.initial_node = effective.initial_node;

  for (;;) {
    if (state.uncovered.empty()) {
      rec.termination = Termination::full_cover;
      break;
    }
    if (options.budget && state.order.size() >= *options.budget) {
      rec.termination = Termination::budget;
      break;
    }
    StepOutcome outcome =
        policy_step(cfg.algorithm, g, state, view, rng, effective);
    if (!outcome.recruited) {
      rec.termination = Termination::exhausted;
      break;
    }
    rec.cover_sizes.push_back(state.covered.size());
    if (options.observer) options.observer(state, view, outcome);
  }

  rec.recruit_order = state.order;
  rec.final_recruits = state.order.size();
  rec.audit = view.audit_summary();
  rec.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rec;
}

inline RunRecord run(const Graph& g, const PolicyConfig& cfg,
                     const RunOptions& options = {}) {
  return run(g, cfg, natural_level(cfg.algorithm), options);
}

}  // namespace netcover
