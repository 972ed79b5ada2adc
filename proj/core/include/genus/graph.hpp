#pragma once

#include <string>
#include <utility>
#include <vector>

namespace genus {

// Hard cap on the vertex count, matching the widest compiled bitset.
inline constexpr int kMaxVertices = 128;

// Simple undirected graph with a fixed directed-edge numbering.  Undirected
// edge k (endpoints u < v, edges sorted lexicographically) owns the directed
// pair 2k = u->v and 2k+1 = v->u, so inverse(e) is just e ^ 1.
struct Graph {
  int n = 0;
  int m = 0;
  std::vector<std::pair<int, int>> edges;   // (u, v) with u < v, sorted
  std::vector<std::vector<int>> adj;        // ascending neighbor lists
  std::vector<std::vector<int>> out_edges;  // aligned with adj: directed ids
  std::vector<int> tails, heads;            // per directed edge

  // Validates range, simplicity and absence of loops; throws
  // std::invalid_argument otherwise.  Edge orientation and order in the
  // input do not matter.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

  int directed_edges() const { return 2 * m; }
  static int inverse(int e) { return e ^ 1; }

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int min_degree() const;
  int max_degree() const;

  bool has_edge(int u, int v) const;
  int directed_between(int u, int v) const;  // directed id u->v, or -1

  bool is_connected() const;
};

}  // namespace genus
