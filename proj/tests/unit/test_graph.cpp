#include <doctest.h>

#include <stdexcept>

#include "genus/graph.hpp"
#include "test_graphs.hpp"

using genus::Graph;
namespace tg = genus::testing;

TEST_SUITE("graph") {

TEST_CASE("edges are normalized and sorted") {
  Graph g = Graph::from_edges(4, {{2, 0}, {3, 2}, {1, 0}});
  CHECK(g.m == 3);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 3}});
  CHECK(g.adj[0] == std::vector<int>{1, 2});
  CHECK(g.adj[2] == std::vector<int>{0, 3});
  CHECK(g.degree(3) == 1);
}

TEST_CASE("directed ids pair up") {
  Graph g = tg::complete(4);
  for (int e = 0; e < g.directed_edges(); e += 2) {
    CHECK(g.tails[e] == g.heads[e + 1]);
    CHECK(g.heads[e] == g.tails[e + 1]);
    CHECK(g.tails[e] < g.heads[e]);  // even id runs low to high
    CHECK(Graph::inverse(e) == e + 1);
  }
  int d = g.directed_between(2, 1);
  CHECK(d >= 0);
  CHECK(g.tails[d] == 2);
  CHECK(g.heads[d] == 1);
  CHECK(g.directed_between(0, 0) == -1);
}

TEST_CASE("out_edges align with adj") {
  Graph g = tg::petersen();
  for (int v = 0; v < g.n; ++v) {
    REQUIRE(g.adj[v].size() == g.out_edges[v].size());
    for (std::size_t i = 0; i < g.adj[v].size(); ++i) {
      int e = g.out_edges[v][i];
      CHECK(g.tails[e] == v);
      CHECK(g.heads[e] == g.adj[v][i]);
    }
    for (std::size_t i = 1; i < g.adj[v].size(); ++i)
      CHECK(g.adj[v][i - 1] < g.adj[v][i]);
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(genus::kMaxVertices + 1, {}),
                  std::invalid_argument);
}

TEST_CASE("connectivity") {
  CHECK(tg::complete(1).is_connected());
  CHECK(tg::cycle(5).is_connected());
  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(!two.is_connected());
  CHECK(!Graph::from_edges(2, {}).is_connected());
}

TEST_CASE("named graph shapes") {
  Graph tc = tg::tutte_coxeter();
  CHECK(tc.n == 30);
  CHECK(tc.m == 45);
  CHECK(tc.min_degree() == 3);
  CHECK(tc.max_degree() == 3);
  CHECK(tc.is_connected());

  Graph gray = tg::gray_graph();
  CHECK(gray.n == 54);
  CHECK(gray.m == 81);
  CHECK(gray.min_degree() == 3);
  CHECK(gray.max_degree() == 3);
  CHECK(gray.is_connected());

  Graph fol = tg::folkman();
  CHECK(fol.n == 20);
  CHECK(fol.m == 40);
  CHECK(fol.min_degree() == 4);
  CHECK(fol.max_degree() == 4);
  CHECK(fol.is_connected());

  Graph dh = tg::doyle_holt();
  CHECK(dh.n == 27);
  CHECK(dh.m == 54);
  CHECK(dh.min_degree() == 4);
  CHECK(dh.max_degree() == 4);
  CHECK(dh.is_connected());

  Graph dm = tg::dual_menger();
  CHECK(dm.n == 27);
  CHECK(dm.m == 81);
  CHECK(dm.min_degree() == 6);
  CHECK(dm.max_degree() == 6);
  CHECK(dm.is_connected());

  Graph m11 = tg::max_matching_complement(11);
  CHECK(m11.n == 11);
  CHECK(m11.m == 55 - 5);
  CHECK(m11.min_degree() == 9);
  CHECK(m11.max_degree() == 10);

  Graph ttt = tg::triple_triangle_product();
  CHECK(ttt.n == 27);
  CHECK(ttt.m == 81);
  CHECK(ttt.min_degree() == 6);
  CHECK(ttt.max_degree() == 6);
  CHECK(ttt.is_connected());
}

TEST_CASE("random cubic model") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 5; ++rep) {
    Graph g = tg::random_cubic(12, rng);
    CHECK(g.n == 12);
    CHECK(g.min_degree() == 3);
    CHECK(g.max_degree() == 3);
    CHECK(g.is_connected());
  }
}

TEST_CASE("random connected model") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    Graph g = tg::random_connected(1 + rep % 16, rep, rng);
    CHECK(g.is_connected());
  }
}

}  // TEST_SUITE
