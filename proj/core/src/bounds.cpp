#include "genus/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace genus {
namespace {

// walks may continue from edge x exactly onto these edges
template <class Fn>
void for_each_continuation(const Graph& g, int x, Fn&& fn) {
  int v = g.heads[x];
  if (g.degree(v) == 1) {
    fn(x ^ 1);
    return;
  }
  for (int y : g.out_edges[v])
    if (y != (x ^ 1)) fn(y);
}

int shortest_closed_walk(const Graph& g, int e0, std::vector<int>& dist) {
  std::fill(dist.begin(), dist.end(), -1);
  std::deque<int> queue;
  dist[e0] = 1;
  queue.push_back(e0);
  int close_tail = g.tails[e0];
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (g.heads[x] == close_tail &&
        (e0 != (x ^ 1) || g.degree(close_tail) == 1))
      return dist[x];  // first closure found by the BFS is the shortest
    for_each_continuation(g, x, [&](int y) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    });
  }
  return 2 * g.m;  // unreachable for connected graphs; any face fits this
}

mpq_class unit_fraction(int den) {
  assert(den > 0);
  return mpq_class(1, den);
}

mpq_class edge_sequence_bound(const Graph& g, const std::vector<int>& fw) {
  std::vector<int> s;
  s.reserve(2 * g.m);
  for (int w : fw) {
    s.push_back(w);
    s.push_back(w);
  }
  std::sort(s.begin(), s.end());
  int longest = s.back();
  // the face holding the hardest edge has at least that many edge slots, all
  // of which count 1/longest or less; charge that to the easiest victims
  int shared = std::min(longest, 2 * g.m);
  mpq_class total = 0;
  for (int i = 0; i < 2 * g.m - shared; ++i) total += unit_fraction(s[i]);
  mpq_class tail(shared, longest);
  tail.canonicalize();
  total += tail;
  return total;
}

mpq_class angle_sequence_bound(const Graph& g, const std::vector<int>& fw) {
  mpq_class total = 0;
  std::vector<int> vals;
  for (int v = 0; v < g.n; ++v) {
    vals.clear();
    for (int e : g.out_edges[v]) vals.push_back(fw[e / 2]);
    std::sort(vals.begin(), vals.end());
    if (vals.size() == 1) {
      total += unit_fraction(vals[0]);
      continue;
    }
    // every corner at v is as long as the larger of its two edges: drop the
    // smallest value and count the largest twice
    for (std::size_t i = 1; i < vals.size(); ++i) total += unit_fraction(vals[i]);
    total += unit_fraction(vals.back());
  }
  return total;
}

int ceil_to_int(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return static_cast<int>(r.get_si());
}

}  // namespace

std::vector<int> facial_walk_lengths(const Graph& g) {
  std::vector<int> fw(g.m, 0);
  std::vector<int> dist(g.directed_edges(), -1);
  for (int k = 0; k < g.m; ++k)
    fw[k] = shortest_closed_walk(g, 2 * k, dist);
  return fw;
}

BoundReport genus_lower_bound(const Graph& g, bool nontrivial) {
  BoundReport rep;
  rep.trivial_faces = std::max(2 * g.m / 3, 1);
  rep.face_limit = rep.trivial_faces;
  if (nontrivial && g.m > 0) {
    std::vector<int> fw = facial_walk_lengths(g);
    rep.edge_faces = edge_sequence_bound(g, fw);
    rep.angle_faces = angle_sequence_bound(g, fw);
    rep.nontrivial = true;
    rep.face_limit = std::min(rep.face_limit, rep.edge_faces);
    rep.face_limit = std::min(rep.face_limit, rep.angle_faces);
  }
  mpq_class genus2 = mpq_class(2 + g.m - g.n) - rep.face_limit;
  rep.genus_lb = std::max(0, ceil_to_int(genus2 / 2));
  return rep;
}

}  // namespace genus
