#include <algorithm>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "netcover/graph.hpp"
#include "netcover/generators.hpp"
#include "helpers.hpp"

using namespace netcover;
using testutil::make_complete;
using testutil::make_path;
using testutil::make_star;

TEST_CASE("neighbors on small graphs") {
  Graph triangle = make_complete(3);
  CHECK(triangle.neighbors(1) == std::vector<NodeId>{0, 2});

  Graph path = make_path(4);
  CHECK(path.neighbors(0) == std::vector<NodeId>{1});

  Graph edgeless(2);
  CHECK(edgeless.neighbors(0).empty());

  CHECK_THROWS_AS(path.neighbors(4), std::out_of_range);
}

TEST_CASE("neighbors_of_set") {
  Graph path = make_path(4);
  std::vector<NodeId> a{1};
  CHECK(neighbors_of_set(path, a) == std::vector<NodeId>{0, 2});

  std::vector<NodeId> all{0, 1, 2, 3};
  CHECK(neighbors_of_set(path, all).empty());

  Graph star = make_star(4);
  std::vector<NodeId> leaf{1};
  CHECK(neighbors_of_set(star, leaf) == std::vector<NodeId>{0});

  std::vector<NodeId> bad{9};
  CHECK_THROWS_AS(neighbors_of_set(path, bad), std::out_of_range);
}

TEST_CASE("degree") {
  Graph star = make_star(4);
  CHECK(star.degree(0) == 4);
  CHECK(star.degree(1) == 1);
  CHECK(make_complete(3).degree(2) == 2);
}

TEST_CASE("is_connected_subset basics") {
  Graph path = make_path(4);
  CHECK(is_connected_subset(path, std::vector<NodeId>{0, 1}));
  CHECK_FALSE(is_connected_subset(path, std::vector<NodeId>{0, 3}));
  CHECK(is_connected_subset(path, std::vector<NodeId>{2}));
  CHECK_THROWS_AS(is_connected_subset(path, std::vector<NodeId>{}),
                  std::invalid_argument);
}

TEST_CASE("is_connected_subset agrees with union-find on random subsets") {
  Rng rng(2024);
  for (int round = 0; round < 200; ++round) {
    std::size_t n = 2 + rng.below(29);
    Graph g = gen_erdos_renyi(n, 0.15, rng.next_u64());
    std::vector<NodeId> subset;
    for (NodeId i = 0; i < n; ++i)
      if (rng.bernoulli(0.4)) subset.push_back(i);
    if (subset.empty()) subset.push_back(static_cast<NodeId>(rng.below(n)));
    CHECK(is_connected_subset(g, subset) ==
          testutil::connected_subset_oracle(g, subset));
  }
}

TEST_CASE("adjacency symmetry on generated graphs") {
  Graph g = gen_erdos_renyi(40, 0.2, 99);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    for (NodeId j : g.neighbors(i)) {
      CHECK(i != j);
      CHECK(g.has_edge(j, i));
    }
    CHECK(g.degree(i) == g.neighbors(i).size());
  }
}

TEST_CASE("edge list load") {
  Graph path3 = load_edge_list("3 2\n0 1\n1 2\n");
  CHECK(path3 == make_path(3));

  SECTION("self-loop rejected with line number") {
    CHECK_THROWS_WITH(load_edge_list("2 1\n0 0\n"),
                      Catch::Matchers::ContainsSubstring("line 2") &&
                          Catch::Matchers::ContainsSubstring("self-loop"));
  }
  SECTION("duplicate edge rejected") {
    CHECK_THROWS_WITH(load_edge_list("3 2\n0 1\n1 0\n"),
                      Catch::Matchers::ContainsSubstring("duplicate"));
  }
  SECTION("id out of declared range") {
    CHECK_THROWS_WITH(load_edge_list("3 1\n0 3\n"),
                      Catch::Matchers::ContainsSubstring("out of range"));
  }
  SECTION("malformed line") {
    CHECK_THROWS_AS(load_edge_list("3 2\n0 1\nbogus\n"), parse_error);
    CHECK_THROWS_AS(load_edge_list("3\n"), parse_error);
  }
  SECTION("missing edges") {
    CHECK_THROWS_WITH(load_edge_list("3 2\n0 1\n"),
                      Catch::Matchers::ContainsSubstring("expected 2 edges"));
  }
  SECTION("trailing junk") {
    CHECK_THROWS_WITH(load_edge_list("2 1\n0 1\n0 1\n"),
                      Catch::Matchers::ContainsSubstring("trailing"));
  }
}

TEST_CASE("edge list canonical round trip") {
  // loader accepts reversed and unsorted edges; writer canonicalizes
  Graph g = load_edge_list("4 3\n2 3\n1 0\n1 2\n");
  CHECK(write_edge_list(g) == "4 3\n0 1\n1 2\n2 3\n");

  Rng rng(7);
  for (int round = 0; round < 20; ++round) {
    Graph random = gen_erdos_renyi(5 + rng.below(40), 0.2, rng.next_u64());
    CHECK(load_edge_list(write_edge_list(random)) == random);
  }
}

TEST_CASE("NodeSet bookkeeping") {
  NodeSet s(5);
  CHECK(s.insert(3));
  CHECK_FALSE(s.insert(3));
  CHECK(s.size() == 1);
  CHECK(s.to_vector() == std::vector<NodeId>{3});
  CHECK(s.complement_vector() == std::vector<NodeId>{0, 1, 2, 4});
  CHECK(s.erase(3));
  CHECK_FALSE(s.erase(3));
  CHECK(s.empty());
}
