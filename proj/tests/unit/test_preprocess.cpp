#include <doctest.h>

#include <random>

#include "genus/faces.hpp"
#include "genus/preprocess.hpp"
#include "genus/rotation.hpp"
#include "test_graphs.hpp"

using genus::Graph;
using genus::Reduction;
using genus::ReductionStep;
using genus::RotationSystem;
using genus::VertexSet64;
namespace tg = genus::testing;

namespace {

int genus_of(const Graph& g, const RotationSystem& rot) {
  return euler_genus(g, genus::trace_faces<VertexSet64>(g, rot));
}

}  // namespace

TEST_SUITE("preprocess") {

TEST_CASE("cycles, trees and K2n collapse to a point") {
  for (const Graph& g : {tg::cycle(9), tg::path(7), tg::complete_bipartite(2, 5),
                         tg::complete_bipartite(2, 2)}) {
    Reduction red = reduce_graph(g);
    CHECK(red.reduced.n == 1);
    CHECK(red.reduced.m == 0);
  }
}

TEST_CASE("min degree three graphs are untouched") {
  Graph g = tg::petersen();
  Reduction red = reduce_graph(g);
  CHECK(red.steps.empty());
  CHECK(red.reduced.n == g.n);
  CHECK(red.reduced.edges == g.edges);
  CHECK(red.kept.size() == 10);
}

TEST_CASE("tiny graphs pass through unchanged") {
  Graph k2 = tg::complete(2);
  Reduction red = reduce_graph(k2);
  CHECK(red.reduced.n == 2);
  CHECK(red.steps.empty());
}

TEST_CASE("pendant path onto K4") {
  // K4 with a two-edge tail hanging off vertex 0
  Graph g = Graph::from_edges(
      6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}});
  Reduction red = reduce_graph(g);
  CHECK(red.reduced.n == 4);
  CHECK(red.reduced.m == 6);
  CHECK(red.kept == std::vector<int>{0, 1, 2, 3});
  REQUIRE(red.steps.size() == 2);
  // vertex 4 is the first queued degree-2 vertex; its suppression turns 5
  // into a leaf of 0
  CHECK(red.steps[0].kind == ReductionStep::Kind::Suppress);
  CHECK(red.steps[0].v == 4);
  CHECK(red.steps[1].kind == ReductionStep::Kind::DeleteLeaf);
  CHECK(red.steps[1].v == 5);
}

TEST_CASE("suppression can create parallels that get dropped") {
  // theta graph: two vertices joined by three internally disjoint paths
  Graph g = Graph::from_edges(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
  Reduction red = reduce_graph(g);
  CHECK(red.reduced.n == 1);
  bool dropped = false;
  for (const auto& s : red.steps)
    dropped |= s.kind == ReductionStep::Kind::DropParallel;
  CHECK(dropped);
}

TEST_CASE("restore rebuilds an embedding of the original") {
  Graph g = Graph::from_edges(
      6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}});
  Reduction red = reduce_graph(g);
  RotationSystem reduced_rot = natural_rotation(red.reduced);
  RotationSystem restored = restore_rotation(g, red, reduced_rot);
  CHECK(rotation_error(g, restored).empty());
  CHECK(genus_of(g, restored) == genus_of(red.reduced, reduced_rot));
}

TEST_CASE("restore preserves genus on random reducible graphs") {
  std::mt19937 rng(17);
  int reduced_cases = 0;
  for (int rep = 0; rep < 200; ++rep) {
    Graph g = tg::random_connected(2 + rep % 11, rep % 5, rng);
    Reduction red = reduce_graph(g);
    if (red.steps.empty()) continue;
    ++reduced_cases;
    RotationSystem base = natural_rotation(red.reduced);
    RotationSystem restored = restore_rotation(g, red, base);
    CHECK(rotation_error(g, restored).empty());
    CHECK(genus_of(g, restored) == genus_of(red.reduced, base));
  }
  CHECK(reduced_cases > 50);  // the model must actually exercise restore
}

}  // TEST_SUITE
