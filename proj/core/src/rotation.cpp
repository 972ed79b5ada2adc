#include "genus/rotation.hpp"

#include <algorithm>
#include <stdexcept>

namespace genus {

RotationSystem rotation_from_orders(const Graph& g,
                                    const std::vector<std::vector<int>>& orders) {
  if (static_cast<int>(orders.size()) != g.n)
    throw std::invalid_argument("rotation orders: wrong vertex count");
  RotationSystem rot;
  rot.next.assign(g.directed_edges(), -1);
  for (int v = 0; v < g.n; ++v) {
    const auto& cyc = orders[v];
    if (static_cast<int>(cyc.size()) != g.degree(v))
      throw std::invalid_argument("rotation orders: vertex " +
                                  std::to_string(v) + " has wrong degree");
    std::vector<int> sorted_cyc = cyc;
    std::sort(sorted_cyc.begin(), sorted_cyc.end());
    if (sorted_cyc != g.adj[v])
      throw std::invalid_argument("rotation orders: vertex " +
                                  std::to_string(v) +
                                  " does not list its neighbors");
    for (size_t i = 0; i < cyc.size(); ++i) {
      int e = g.directed_between(v, cyc[i]);
      int f = g.directed_between(v, cyc[(i + 1) % cyc.size()]);
      rot.next[e] = f;
    }
  }
  return rot;
}

RotationSystem natural_rotation(const Graph& g) {
  return rotation_from_orders(g, g.adj);
}

std::vector<std::vector<int>> neighbor_orders(const Graph& g,
                                              const RotationSystem& rot) {
  validate_rotation(g, rot);
  std::vector<std::vector<int>> orders(g.n);
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) == 0) continue;
    int start = g.out_edges[v][0];  // edge to the smallest neighbor
    int e = start;
    do {
      orders[v].push_back(g.heads[e]);
      e = rot.next[e];
    } while (e != start);
  }
  return orders;
}

std::string rotation_error(const Graph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.next.size()) != g.directed_edges())
    return "rotation has wrong size";
  for (int e = 0; e < g.directed_edges(); ++e) {
    int f = rot.next[e];
    if (f < 0 || f >= g.directed_edges())
      return "rotation leaves the edge range at vertex " +
             std::to_string(g.tails[e]);
    if (g.tails[f] != g.tails[e])
      return "rotation at vertex " + std::to_string(g.tails[e]) +
             " jumps to another vertex";
  }
  // each vertex's out-edges must form one cycle
  std::vector<char> seen(g.directed_edges(), 0);
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) == 0) continue;
    int start = g.out_edges[v][0];
    int e = start;
    int steps = 0;
    do {
      if (seen[e])
        return "rotation at vertex " + std::to_string(v) + " is not one cycle";
      seen[e] = 1;
      e = rot.next[e];
      if (++steps > g.degree(v))
        return "rotation at vertex " + std::to_string(v) + " is not one cycle";
    } while (e != start);
    if (steps != g.degree(v))
      return "rotation at vertex " + std::to_string(v) + " misses edges";
  }
  return {};
}

void validate_rotation(const Graph& g, const RotationSystem& rot) {
  std::string err = rotation_error(g, rot);
  if (!err.empty()) throw std::invalid_argument(err);
}

RotationSystem mirrored(const Graph& g, const RotationSystem& rot) {
  validate_rotation(g, rot);
  RotationSystem out;
  out.next.resize(rot.next.size());
  // reversing a cyclic permutation is inverting it
  for (int e = 0; e < g.directed_edges(); ++e) out.next[rot.next[e]] = e;
  return out;
}

}  // namespace genus
