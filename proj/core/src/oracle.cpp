#include "genus/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace genus {

namespace {

// Enumerates cyclic neighbor orders per vertex: the first (smallest)
// neighbor stays fixed, the rest runs through all permutations.
struct RotationEnumerator {
  std::vector<std::vector<int>> orders;

  explicit RotationEnumerator(const Graph& g) : orders(g.adj) {}

  bool advance() {
    for (auto& ord : orders) {
      if (ord.size() <= 2) continue;
      if (std::next_permutation(ord.begin() + 1, ord.end())) return true;
      // wrapped around; carry into the next vertex
    }
    return false;
  }
};

// Traces faces of the rotation given by cyclic neighbor lists.  A directed
// edge is a (vertex, slot) pair; the successor of v->w continues at w with
// the neighbor that follows v in w's cyclic order.
struct FaceTracer {
  int n;
  std::vector<int> base;       // first directed id per vertex
  std::vector<int> tail_of;    // tail vertex per directed id
  std::vector<int> pos;        // pos[w * n + v] = slot of v in orders[w]
  std::vector<char> seen;

  explicit FaceTracer(const Graph& g) : n(g.n), base(g.n + 1, 0) {
    for (int v = 0; v < g.n; ++v) base[v + 1] = base[v] + g.degree(v);
    tail_of.resize(base[n]);
    for (int v = 0; v < g.n; ++v)
      for (int e = base[v]; e < base[v + 1]; ++e) tail_of[e] = v;
    pos.assign(static_cast<size_t>(n) * n, -1);
    seen.assign(base[n], 0);
  }

  int count_faces(const std::vector<std::vector<int>>& orders) {
    int total = base[n];
    if (total == 0) return 1;  // isolated vertex: one face
    for (int v = 0; v < n; ++v)
      for (size_t i = 0; i < orders[v].size(); ++i)
        pos[static_cast<size_t>(v) * n + orders[v][i]] = static_cast<int>(i);
    std::fill(seen.begin(), seen.end(), 0);
    int faces = 0;
    for (int start = 0; start < total; ++start) {
      if (seen[start]) continue;
      ++faces;
      int e = start;
      do {
        seen[e] = 1;
        int v = tail_of[e];  // e encodes v -> w
        int w = orders[v][e - base[v]];
        int slot = pos[static_cast<size_t>(w) * n + v];
        int next_slot = (slot + 1) % static_cast<int>(orders[w].size());
        e = base[w] + next_slot;
      } while (e != start);
    }
    return faces;
  }
};

std::uint64_t checked_budget(const Graph& g, const OracleOptions& opt) {
  std::uint64_t total = oracle_rotation_count(g);
  if (total > opt.budget)
    throw OracleError("oracle budget exceeded: " + std::to_string(total) +
                      " rotation systems > " + std::to_string(opt.budget));
  return total;
}

bool is_self_mirror(const std::vector<std::vector<int>>& orders) {
  // mirroring reverses each cycle; with the first element pinned that means
  // reversing the tail of each order
  for (const auto& ord : orders) {
    if (ord.size() < 3) continue;
    for (size_t i = 1, j = ord.size() - 1; i < j; ++i, --j)
      if (ord[i] != ord[j]) return false;
  }
  return true;
}

}  // namespace

std::uint64_t oracle_rotation_count(const Graph& g) {
  unsigned __int128 total = 1;
  const unsigned __int128 cap = ~std::uint64_t{0};
  for (int v = 0; v < g.n; ++v) {
    for (int i = 2; i < g.degree(v); ++i) {
      total *= i;
      if (total > cap) return ~std::uint64_t{0};
    }
  }
  return static_cast<std::uint64_t>(total);
}

int oracle_genus(const Graph& g, const OracleOptions& opt) {
  checked_budget(g, opt);
  RotationEnumerator en(g);
  FaceTracer tracer(g);
  int best = -1;
  do {
    int f = tracer.count_faces(en.orders);
    int twice = 2 + g.m - g.n - f;
    assert(twice >= 0 && twice % 2 == 0);
    int genus = twice / 2;
    if (best < 0 || genus < best) best = genus;
  } while (en.advance());
  return best;
}

std::vector<std::uint64_t> oracle_genus_histogram(const Graph& g,
                                                  const OracleOptions& opt) {
  checked_budget(g, opt);
  int max_genus = (g.m - g.n + 2) / 2 + 1;
  std::vector<std::uint64_t> hist(std::max(max_genus + 1, 1), 0);
  RotationEnumerator en(g);
  FaceTracer tracer(g);
  do {
    int f = tracer.count_faces(en.orders);
    int genus = (2 + g.m - g.n - f) / 2;
    assert(genus >= 0 && genus < static_cast<int>(hist.size()));
    ++hist[genus];
  } while (en.advance());
  return hist;
}

std::uint64_t oracle_count(const Graph& g, int genus, const OracleOptions& opt) {
  checked_budget(g, opt);
  if (g.min_degree() >= 3) {
    // reversing a cycle on >= 3 distinct elements never reproduces it, so
    // rotations pair up perfectly with their mirrors
    auto hist = oracle_genus_histogram(g, opt);
    std::uint64_t raw =
        genus < static_cast<int>(hist.size()) ? hist[genus] : 0;
    assert(raw % 2 == 0);
    return raw / 2;
  }
  RotationEnumerator en(g);
  FaceTracer tracer(g);
  std::uint64_t total = 0, self = 0;
  do {
    int f = tracer.count_faces(en.orders);
    int got = (2 + g.m - g.n - f) / 2;
    if (got == genus) {
      ++total;
      if (is_self_mirror(en.orders)) ++self;
    }
  } while (en.advance());
  assert((total - self) % 2 == 0);
  return self + (total - self) / 2;
}

int oracle_face_count(const Graph& g,
                      const std::vector<std::vector<int>>& orders) {
  if (static_cast<int>(orders.size()) != g.n)
    throw std::invalid_argument("oracle: wrong vertex count");
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> sorted_ord = orders[v];
    std::sort(sorted_ord.begin(), sorted_ord.end());
    if (sorted_ord != g.adj[v])
      throw std::invalid_argument("oracle: orders do not match vertex " +
                                  std::to_string(v));
  }
  FaceTracer tracer(g);
  return tracer.count_faces(orders);
}

}  // namespace genus
