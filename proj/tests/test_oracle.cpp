#include <catch2/catch_amalgamated.hpp>

#include "netcover/oracle.hpp"
#include "netcover/policies.hpp"
#include "netcover/generators.hpp"
#include "helpers.hpp"

using namespace netcover;
using testutil::make_complete;
using testutil::make_cycle;
using testutil::make_path;
using testutil::make_star;

TEST_CASE("max coverage on the four-path") {
  Graph path = make_path(4);

  OracleResult k1 = brute_force_max_coverage(path, 1);
  CHECK(k1.cover_size == 3);
  CHECK(k1.best_set == std::vector<NodeId>{1});
  CHECK(k1.optimal);

  OracleResult k2 = brute_force_max_coverage(path, 2);
  CHECK(k2.cover_size == 4);
  CHECK(k2.best_set == std::vector<NodeId>{0, 2});  // lex-smallest maximizer

  OracleResult k9 = brute_force_max_coverage(path, 9);
  CHECK(k9.cover_size == 4);
}

TEST_CASE("connected max coverage") {
  Graph path = make_path(4);
  OracleResult k2 = brute_force_max_connected_cover(path, 2);
  CHECK(k2.cover_size == 4);
  CHECK(is_connected_subset(path, k2.best_set));

  SECTION("two disjoint edges: a connected pair covers one edge only") {
    Graph g = Graph::from_edges(
        4, std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {2, 3}});
    OracleResult res = brute_force_max_connected_cover(g, 2);
    CHECK(res.cover_size == 2);
  }
  SECTION("k=1: identical to the unconstrained oracle") {
    Rng rng(15);
    for (int round = 0; round < 10; ++round) {
      Graph g = gen_erdos_renyi(10, 0.25, rng.next_u64());
      OracleResult a = brute_force_max_coverage(g, 1);
      OracleResult b = brute_force_max_connected_cover(g, 1);
      CHECK(a.cover_size == b.cover_size);
      CHECK(a.best_set == b.best_set);
    }
  }
}

TEST_CASE("minimum recruits to full cover") {
  OracleResult star = min_recruits_full_cover(make_star(4), false);
  CHECK(star.best_set.size() == 1);
  CHECK(star.cover_size == 5);

  OracleResult path6 = min_recruits_full_cover(make_path(6), false);
  CHECK(path6.best_set.size() == 2);
  CHECK(path6.best_set == std::vector<NodeId>{1, 4});

  // cycle of six: two opposite nodes suffice unconstrained, but a connected
  // recruit set must be a path of four
  OracleResult c6_free = min_recruits_full_cover(make_cycle(6), false);
  CHECK(c6_free.best_set.size() == 2);
  OracleResult c6_conn = min_recruits_full_cover(make_cycle(6), true);
  CHECK(c6_conn.best_set.size() == 4);
  CHECK(is_connected_subset(make_cycle(6), c6_conn.best_set));

  SECTION("disconnected graph is infeasible under connectivity") {
    Graph g = Graph::from_edges(
        4, std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {2, 3}});
    OracleResult res = min_recruits_full_cover(g, true);
    CHECK_FALSE(res.feasible);
    CHECK(min_recruits_full_cover(g, false).best_set.size() == 2);
  }
}

TEST_CASE("size guards refuse big graphs") {
  Graph big(30);
  CHECK_THROWS_AS(brute_force_max_coverage(big, 2), std::invalid_argument);
  CHECK_THROWS_AS(min_recruits_full_cover(big, false), std::invalid_argument);
  CHECK_NOTHROW(brute_force_max_coverage(big, 2, 30));
}

TEST_CASE("oracle dominates every heuristic at the same budget") {
  Rng rng(25);
  for (int round = 0; round < 15; ++round) {
    Graph g = gen_erdos_renyi(11, 0.3, rng.next_u64());
    for (std::size_t k = 1; k <= 3; ++k) {
      OracleResult opt = brute_force_max_coverage(g, k);
      OracleResult opt_conn = brute_force_max_connected_cover(g, k);
      CHECK(opt_conn.cover_size <= opt.cover_size);
      for (AlgorithmId algo : all_algorithms) {
        PolicyConfig cfg;
        cfg.algorithm = algo;
        cfg.initial_node = static_cast<NodeId>(rng.below(11));
        cfg.seed = rng.next_u64();
        RunRecord rec = run(g, cfg, natural_level(algo), {.budget = k});
        std::size_t covered = rec.cover_sizes.empty() ? 0 : rec.cover_sizes.back();
        CHECK(covered <= opt.cover_size);
      }
    }
  }
}

TEST_CASE("cover size is invariant under relabeling of transitive graphs") {
  auto relabel = [](const Graph& g, std::size_t shift) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto n = g.node_count();
    for (auto [u, v] : g.edges())
      edges.emplace_back(static_cast<NodeId>((u + shift) % n),
                         static_cast<NodeId>((v + shift) % n));
    return Graph::from_edges(n, edges);
  };
  for (const Graph& g : {make_cycle(8), make_complete(6)}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      std::size_t base = brute_force_max_coverage(g, k).cover_size;
      for (std::size_t shift = 1; shift < 4; ++shift)
        CHECK(brute_force_max_coverage(relabel(g, shift), k).cover_size == base);
    }
  }
}

TEST_CASE("greedy stays within the submodular bound on small graphs") {
  Rng rng(35);
  const double ratio = 1.0 - 1.0 / std::exp(1.0);
  for (int round = 0; round < 12; ++round) {
    std::size_t n = 8 + rng.below(5);
    Graph g = round % 2 == 0
                  ? gen_erdos_renyi(n, 0.3, rng.next_u64())
                  : gen_barabasi_albert(n, 2, rng.next_u64());
    for (std::size_t k = 1; k <= 4; ++k) {
      OracleResult opt = brute_force_max_coverage(g, k);
      PolicyConfig cfg;
      cfg.algorithm = AlgorithmId::scp4;
      RunRecord rec = run(g, cfg, KnowledgeLevel::full, {.budget = k});
      std::size_t covered = rec.cover_sizes.empty() ? 0 : rec.cover_sizes.back();
      CHECK(covered <= opt.cover_size);
      CHECK(static_cast<double>(covered) >=
            ratio * static_cast<double>(opt.cover_size));
    }
  }
}
