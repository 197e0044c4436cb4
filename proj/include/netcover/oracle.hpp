#pragma once

// Exact brute-force solvers for small instances. Ground truth for the
// greedy approximation bound and for the acceptance tests: every subset of
// size up to K is scored, so the results are exact by construction.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "netcover/graph.hpp"

namespace netcover {

struct OracleResult {
  std::vector<NodeId> best_set;  // lexicographically smallest maximizer
  std::size_t cover_size = 0;    // |best_set ∪ N(best_set)|
  bool optimal = false;          // search ran to completion
  bool feasible = true;          // min_recruits: full cover exists
  std::uint64_t explored = 0;    // subsets examined
};

namespace detail {

inline std::size_t cover_size_of(const Graph& g,
                                 std::span<const NodeId> subset) {
  NodeSet covered(g.node_count());
  for (NodeId i : subset) {
    covered.insert(i);
    for (NodeId j : g.neighbors(i)) covered.insert(j);
  }
  return covered.size();
}

/// Lexicographic order on ascending id sequences; the shorter sequence wins
/// on a tie of prefixes.
inline bool lex_less(const std::vector<NodeId>& a,
                     const std::vector<NodeId>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <typename Filter>
OracleResult enumerate_subsets(const Graph& g, std::size_t k,
                               std::size_t size_guard, Filter&& admit) {
  const std::size_t n = g.node_count();
  if (n > size_guard)
    throw std::invalid_argument("oracle: graph has " + std::to_string(n) +
                                " nodes, exceeding the size guard of " +
                                std::to_string(size_guard));
  if (k > n) k = n;

  OracleResult result;
  result.best_set = {};
  result.cover_size = 0;
  result.explored = 1;  // the empty set

  std::vector<NodeId> combo;
  for (std::size_t size = 1; size <= k; ++size) {
    combo.resize(size);
    for (std::size_t i = 0; i < size; ++i) combo[i] = static_cast<NodeId>(i);
    for (;;) {
      ++result.explored;
      if (admit(combo)) {
        std::size_t cover = cover_size_of(g, combo);
        if (cover > result.cover_size ||
            (cover == result.cover_size && lex_less(combo, result.best_set)))
          result = {combo, cover, false, true, result.explored};
      }
      // next combination of {0..n-1} in lexicographic order
      std::size_t pos = size;
      while (pos > 0 && combo[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++combo[pos - 1];
      for (std::size_t i = pos; i < size; ++i) combo[i] = combo[i - 1] + 1;
    }
  }
  result.optimal = true;
  return result;
}

}  // namespace detail

/// Exact maximum coverage: the subset of at most k nodes maximizing
/// |S ∪ N(S)|. Ties return the lexicographically smallest set.
inline OracleResult brute_force_max_coverage(const Graph& g, std::size_t k,
                                             std::size_t size_guard = 24) {
  return detail::enumerate_subsets(
      g, k, size_guard, [](const std::vector<NodeId>&) { return true; });
}

/// Exact maximum coverage restricted to connected subsets.
inline OracleResult brute_force_max_connected_cover(
    const Graph& g, std::size_t k, std::size_t size_guard = 24) {
  return detail::enumerate_subsets(
      g, k, size_guard,
      [&g](const std::vector<NodeId>& s) { return is_connected_subset(g, s); });
}

/// Smallest number of recruits whose cover is the whole graph, searching k
/// upward. With connected=true on a disconnected graph no full cover
/// exists and the result is flagged infeasible.
inline OracleResult min_recruits_full_cover(const Graph& g, bool connected,
                                            std::size_t size_guard = 20) {
  const std::size_t n = g.node_count();
  if (n > size_guard)
    throw std::invalid_argument("oracle: graph has " + std::to_string(n) +
                                " nodes, exceeding the size guard of " +
                                std::to_string(size_guard));
  if (n == 0) return {{}, 0, true, true, 1};
  if (connected && !is_connected(g)) {
    OracleResult infeasible;
    infeasible.optimal = true;
    infeasible.feasible = false;
    return infeasible;
  }
  std::uint64_t explored = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    OracleResult at_k = connected
                            ? brute_force_max_connected_cover(g, k, size_guard)
                            : brute_force_max_coverage(g, k, size_guard);
    explored += at_k.explored;
    if (at_k.cover_size == n) {
      at_k.explored = explored;
      return at_k;
    }
  }
  throw std::logic_error("min_recruits_full_cover: no cover found");  // unreachable
}

}  // namespace netcover
