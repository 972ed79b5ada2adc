#include <doctest.h>

#include <numeric>

#include "genus/oracle.hpp"
#include "test_graphs.hpp"

using genus::OracleError;
using genus::OracleOptions;
namespace tg = genus::testing;

TEST_SUITE("oracle") {

TEST_CASE("rotation counts") {
  CHECK(genus::oracle_rotation_count(tg::cycle(5)) == 1);
  CHECK(genus::oracle_rotation_count(tg::path(4)) == 1);
  CHECK(genus::oracle_rotation_count(tg::complete(4)) == 16);       // (2!)^4
  CHECK(genus::oracle_rotation_count(tg::complete(5)) == 7776);     // (3!)^5
  CHECK(genus::oracle_rotation_count(tg::petersen()) == 1024);      // (2!)^10
  CHECK(genus::oracle_rotation_count(tg::complete_bipartite(2, 3)) == 4);
}

TEST_CASE("well-known genera") {
  CHECK(genus::oracle_genus(tg::complete(1)) == 0);
  CHECK(genus::oracle_genus(tg::path(5)) == 0);
  CHECK(genus::oracle_genus(tg::cycle(7)) == 0);
  CHECK(genus::oracle_genus(tg::complete(4)) == 0);
  CHECK(genus::oracle_genus(tg::complete(5)) == 1);
  CHECK(genus::oracle_genus(tg::complete_bipartite(3, 3)) == 1);
  CHECK(genus::oracle_genus(tg::complete_bipartite(2, 3)) == 0);
  CHECK(genus::oracle_genus(tg::petersen()) == 1);
}

TEST_CASE("K4 histogram: one planar mirror pair, seven toroidal") {
  auto hist = genus::oracle_genus_histogram(tg::complete(4));
  REQUIRE(hist.size() >= 2);
  CHECK(hist[0] == 2);
  CHECK(hist[1] == 14);
  CHECK(std::accumulate(hist.begin(), hist.end(), 0LL) == 16);
  CHECK(genus::oracle_count(tg::complete(4), 0) == 1);
  CHECK(genus::oracle_count(tg::complete(4), 1) == 7);
}

TEST_CASE("histogram sums to the rotation count") {
  for (const genus::Graph& g :
       {tg::complete(5), tg::complete_bipartite(3, 3), tg::petersen()}) {
    auto hist = genus::oracle_genus_histogram(g);
    long long total = std::accumulate(hist.begin(), hist.end(), 0LL);
    CHECK(total == static_cast<long long>(genus::oracle_rotation_count(g)));
    for (std::size_t gg = 0; gg < hist.size(); ++gg) {
      CHECK(hist[gg] % 2 == 0);  // mirror pairs, max degree >= 3
      CHECK(genus::oracle_count(g, static_cast<int>(gg)) ==
            static_cast<std::uint64_t>(hist[gg] / 2));
    }
  }
}

TEST_CASE("paths and cycles are their own mirror") {
  CHECK(genus::oracle_count(tg::cycle(6), 0) == 1);
  CHECK(genus::oracle_count(tg::path(3), 0) == 1);
  CHECK(genus::oracle_count(tg::complete(1), 0) == 1);
  CHECK(genus::oracle_count(tg::cycle(6), 1) == 0);
}

TEST_CASE("budget guard") {
  OracleOptions tight;
  tight.budget = 100;
  CHECK_THROWS_AS(genus::oracle_genus(tg::complete(5), tight), OracleError);
  CHECK_NOTHROW(genus::oracle_genus(tg::complete(4), tight));
}

TEST_CASE("face count checks its input") {
  genus::Graph g = tg::complete(4);
  auto orders = std::vector<std::vector<int>>(4);
  for (int v = 0; v < 4; ++v) orders[v] = g.adj[v];
  // ascending cyclic orders embed K4 in the torus: a 4-face and an 8-face
  CHECK(genus::oracle_face_count(g, orders) == 2);
  orders[0] = {1, 2};
  CHECK_THROWS_AS(genus::oracle_face_count(g, orders), std::invalid_argument);
}

}  // TEST_SUITE
