#pragma once

#include <vector>

#include "genus/graph.hpp"
#include "genus/rotation.hpp"

namespace genus {

// Genus-preserving reduction log.  Vertex numbers are original ids.
struct ReductionStep {
  enum class Kind { DeleteLeaf, Suppress, DropParallel };

  Kind kind;
  int v;      // removed vertex; for DropParallel the path vertex of the cause
  int a;      // DeleteLeaf: the neighbor; otherwise the left endpoint
  int b;      // Suppress / DropParallel: the right endpoint (-1 for leaves)
  int cause;  // DropParallel: index of the Suppress whose edge was dropped
};

struct Reduction {
  Graph reduced;
  std::vector<ReductionStep> steps;
  std::vector<int> kept;  // reduced id -> original id, increasing
};

// Deletes degree-1 vertices and suppresses degree-2 vertices to a fixpoint;
// when a suppression would duplicate an existing edge the new edge is dropped
// on the spot and its endpoints re-examined.  The result has min degree >= 3
// or is a single vertex.  Graphs on fewer than three vertices are returned
// unchanged.  Genus is preserved throughout.
Reduction reduce_graph(const Graph& g);

// Undoes the log on an embedding of the reduced graph, step by step in LIFO
// order, producing a rotation of the original graph with the same genus.
// Throws std::invalid_argument if reduced_rot does not fit red.reduced.
RotationSystem restore_rotation(const Graph& original, const Reduction& red,
                                const RotationSystem& reduced_rot);

}  // namespace genus
