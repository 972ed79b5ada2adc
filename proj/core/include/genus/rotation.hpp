#pragma once

#include <string>
#include <vector>

#include "genus/graph.hpp"

namespace genus {

// Rotation system: next[e] is the directed edge following e in the clockwise
// order around tail(e).  Restricted to the out-edges of one vertex, next must
// form a single cycle.
struct RotationSystem {
  std::vector<int> next;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

// Builds a rotation from per-vertex cyclic neighbor lists.  orders[v] must be
// a permutation of the neighbors of v.
RotationSystem rotation_from_orders(const Graph& g,
                                    const std::vector<std::vector<int>>& orders);

// Neighbors in ascending order at every vertex.
RotationSystem natural_rotation(const Graph& g);

// Clockwise neighbor list per vertex, each starting at the smallest-labeled
// neighbor.
std::vector<std::vector<int>> neighbor_orders(const Graph& g,
                                              const RotationSystem& rot);

// Empty string if rot is well formed for g, otherwise a message naming the
// first offending vertex.
std::string rotation_error(const Graph& g, const RotationSystem& rot);
void validate_rotation(const Graph& g, const RotationSystem& rot);

// Reverses every vertex cycle.
RotationSystem mirrored(const Graph& g, const RotationSystem& rot);

}  // namespace genus
