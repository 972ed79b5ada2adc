#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "genus/bitset.hpp"
#include "genus/graph.hpp"
#include "genus/rotation.hpp"

namespace genus {

template <class VSet>
struct Face {
  std::vector<int> edge_cycle;  // directed edges in walk order
  VSet vertices;

  int length() const { return static_cast<int>(edge_cycle.size()); }
};

template <class VSet>
struct FaceSet {
  std::vector<Face<VSet>> faces;

  int count() const { return static_cast<int>(faces.size()); }
};

// Euler bookkeeping: 2 - 2g = n - m + f.  Throws std::logic_error on parity
// or sign violations.
int euler_genus(int n, int m, int face_count);

// Faces of (g, rot): from directed edge e the walk continues with
// next[inverse(e)].  The edgeless graph gets one (empty) face, the sphere
// embedding of an isolated vertex.
template <class VSet>
FaceSet<VSet> trace_faces(const Graph& g, const RotationSystem& rot) {
  validate_rotation(g, rot);
  if (g.n > VSet::capacity())
    throw std::invalid_argument("graph too large for this bitset width");
  FaceSet<VSet> out;
  if (g.directed_edges() == 0) {
    Face<VSet> f;
    for (int v = 0; v < g.n; ++v) f.vertices.add(v);
    out.faces.push_back(std::move(f));
    return out;
  }
  std::vector<char> seen(g.directed_edges(), 0);
  int traced = 0;
  for (int e0 = 0; e0 < g.directed_edges(); ++e0) {
    if (seen[e0]) continue;
    Face<VSet> f;
    int e = e0;
    do {
      assert(!seen[e]);
      seen[e] = 1;
      f.edge_cycle.push_back(e);
      f.vertices.add(g.tails[e]);
      e = rot.next[Graph::inverse(e)];
    } while (e != e0);
    traced += f.length();
    out.faces.push_back(std::move(f));
  }
  assert(traced == g.directed_edges());
  (void)traced;
  return out;
}

template <class VSet>
int euler_genus(const Graph& g, const FaceSet<VSet>& fs) {
  return euler_genus(g.n, g.m, fs.count());
}

}  // namespace genus
