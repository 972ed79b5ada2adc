#pragma once

#include <gmpxx.h>

#include <vector>

#include "genus/graph.hpp"

namespace genus {

// Shortest closed walk through each edge that turns like a face boundary:
// consecutive edges share the right endpoint and never double straight back
// except at a degree-one vertex.  Any face through the edge, in any
// embedding, is at least this long.  One value per undirected edge.
std::vector<int> facial_walk_lengths(const Graph& g);

struct BoundReport {
  int trivial_faces = 1;       // max(floor(2m/3), 1)
  bool nontrivial = false;     // walk-based bounds were computed
  mpq_class edge_faces;        // face-count bound from the edge sequence
  mpq_class angle_faces;       // face-count bound from the per-vertex angles
  mpq_class face_limit;        // the bound actually used
  int genus_lb = 0;
};

// Lower bound on the orientable genus of a connected graph.  With
// nontrivial false only the face-count limit max(floor(2m/3), 1) is used.
BoundReport genus_lower_bound(const Graph& g, bool nontrivial = true);

}  // namespace genus
