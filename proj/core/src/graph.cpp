#include "genus/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace genus {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (n > kMaxVertices)
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " exceeds the compiled limit of " +
                                std::to_string(kMaxVertices));
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  for (size_t i = 1; i < edge_list.size(); ++i)
    if (edge_list[i] == edge_list[i - 1])
      throw std::invalid_argument(
          "duplicate edge " + std::to_string(edge_list[i].first) + " " +
          std::to_string(edge_list[i].second));

  Graph g;
  g.n = n;
  g.m = static_cast<int>(edge_list.size());
  g.edges = std::move(edge_list);
  g.adj.assign(n, {});
  g.out_edges.assign(n, {});
  g.tails.resize(g.directed_edges());
  g.heads.resize(g.directed_edges());
  for (int k = 0; k < g.m; ++k) {
    auto [u, v] = g.edges[k];
    g.tails[2 * k] = u;
    g.heads[2 * k] = v;
    g.tails[2 * k + 1] = v;
    g.heads[2 * k + 1] = u;
    g.adj[u].push_back(v);
    g.out_edges[u].push_back(2 * k);
    g.adj[v].push_back(u);
    g.out_edges[v].push_back(2 * k + 1);
  }
  // neighbor lists ascending; edges were sorted, so smaller neighbors were
  // appended first for the second endpoint but not the first
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<int, int>> tmp(g.adj[v].size());
    for (size_t i = 0; i < tmp.size(); ++i)
      tmp[i] = {g.adj[v][i], g.out_edges[v][i]};
    std::sort(tmp.begin(), tmp.end());
    for (size_t i = 0; i < tmp.size(); ++i) {
      g.adj[v][i] = tmp[i].first;
      g.out_edges[v][i] = tmp[i].second;
    }
  }
  return g;
}

int Graph::min_degree() const {
  int d = n > 0 ? degree(0) : 0;
  for (int v = 1; v < n; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  return directed_between(u, v) >= 0;
}

int Graph::directed_between(int u, int v) const {
  const auto& a = adj[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return -1;
  return out_edges[u][it - a.begin()];
}

bool Graph::is_connected() const {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

}  // namespace genus
