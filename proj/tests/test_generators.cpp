#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "netcover/generators.hpp"
#include "helpers.hpp"

using namespace netcover;

TEST_CASE("default_er_probability") {
  CHECK_THAT(default_er_probability(50),
             Catch::Matchers::WithinAbs(2.0 * std::log(50.0) / 50.0, 1e-12));
  CHECK_THAT(default_er_probability(50),
             Catch::Matchers::WithinAbs(0.15648, 1e-5));
  CHECK_THAT(default_er_probability(250),
             Catch::Matchers::WithinAbs(0.04417, 1e-5));
  CHECK_THAT(default_er_probability(2),
             Catch::Matchers::WithinAbs(std::log(2.0), 1e-12));
  CHECK_THROWS_AS(default_er_probability(1), std::domain_error);
}

TEST_CASE("erdos-renyi degenerate probabilities") {
  Graph empty = gen_erdos_renyi(6, 0.0, 123);
  CHECK(empty.edge_count() == 0);

  Graph complete = gen_erdos_renyi(6, 1.0, 123);
  CHECK(complete.edge_count() == 15);
  CHECK(complete == testutil::make_complete(6));
}

TEST_CASE("erdos-renyi determinism and validity") {
  GenSpec spec{GraphModel::erdos_renyi, 60, 0.12, 0, 42};
  Graph a = generate(spec);
  Graph b = generate(spec);
  CHECK(write_edge_list(a) == write_edge_list(b));
  CHECK(a == b);
  Graph c = gen_erdos_renyi(60, 0.12, 43);
  CHECK(a != c);

  for (NodeId i = 0; i < a.node_count(); ++i)
    for (NodeId j : a.neighbors(i)) {
      CHECK(i != j);
      CHECK(a.has_edge(j, i));
    }
}

TEST_CASE("erdos-renyi edge count concentration") {
  // n=1000, p=0.01: mean C(n,2)p = 4995, sigma = sqrt(4995*0.99) ~ 70.3
  const double mean = 499500.0 * 0.01;
  const double sigma = std::sqrt(499500.0 * 0.01 * 0.99);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = gen_erdos_renyi(1000, 0.01, seed);
    CHECK(std::abs(static_cast<double>(g.edge_count()) - mean) < 4 * sigma);
  }
}

TEST_CASE("erdos-renyi connectivity regime") {
  // p = 2 ln(n)/n is comfortably above the connectivity threshold
  for (std::size_t n : {50, 100, 150, 200, 250}) {
    int connected = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed)
      if (is_connected(gen_erdos_renyi(n, default_er_probability(n),
                                       split_seed(999, n, seed))))
        ++connected;
    CHECK(connected >= 28);
  }
}

TEST_CASE("barabasi-albert small cases") {
  Graph single = gen_barabasi_albert(1, 2, 5);
  CHECK(single.node_count() == 1);
  CHECK(single.edge_count() == 0);

  // with m=2 vertices 1 and 2 connect to all earlier vertices
  Graph three = gen_barabasi_albert(3, 2, 5);
  CHECK(three == testutil::make_complete(3));
}

TEST_CASE("barabasi-albert edge count and validity") {
  Graph g = gen_barabasi_albert(500, 2, 11);
  CHECK(g.edge_count() == 1 + 2 * (500 - 2));
  CHECK(is_connected(g));
  for (NodeId i = 0; i < g.node_count(); ++i)
    for (NodeId j : g.neighbors(i)) {
      CHECK(i != j);
      CHECK(g.has_edge(j, i));
    }
}

TEST_CASE("barabasi-albert determinism") {
  Graph a = gen_barabasi_albert(200, 2, 77);
  Graph b = gen_barabasi_albert(200, 2, 77);
  CHECK(write_edge_list(a) == write_edge_list(b));
  CHECK(a != gen_barabasi_albert(200, 2, 78));
}

TEST_CASE("barabasi-albert attachment favors high degree") {
  // the start vertex ends up well above the minimum degree m
  Graph g = gen_barabasi_albert(400, 2, 3);
  std::size_t max_deg = 0;
  for (NodeId i = 0; i < g.node_count(); ++i)
    max_deg = std::max(max_deg, g.degree(i));
  CHECK(max_deg >= 20);
}

TEST_CASE("generator argument validation") {
  CHECK_THROWS_AS(gen_erdos_renyi(5, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_erdos_renyi(0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_barabasi_albert(5, 0, 1), std::invalid_argument);
}
