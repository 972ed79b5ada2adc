#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "genus/graph.hpp"
#include "genus/rotation.hpp"

namespace genus {

struct SearchOptions {
  bool nontrivial_bounds = true;   // start the deepening at the walk bound
  bool preprocess = true;          // contract degree-1/2 vertices first
  bool bfs_relabel = true;         // renumber vertices in breadth-first order
  bool lemma_filter = true;        // skip provably non-critical edges
  double near_root_fraction = 0.5; // portion of the search depth that uses
                                   // fewest-faces edge selection; negative
                                   // disables it
  std::optional<double> time_limit_seconds;
};

struct GenusResult {
  bool timed_out = false;
  int genus = -1;       // valid unless timed_out
  int lower_bound = 0;  // bound the deepening started from
  std::uint64_t nodes = 0;
};

struct DecideResult {
  bool timed_out = false;
  bool at_most = false;
  std::uint64_t nodes = 0;
};

struct EmbeddingResult {
  bool timed_out = false;
  bool found = false;
  int genus = -1;
  RotationSystem rotation;  // on the input graph's labels
  std::uint64_t nodes = 0;
};

struct CountResult {
  bool timed_out = false;
  std::uint64_t count = 0;        // embeddings of the requested genus
  std::uint64_t completions = 0;  // all completions the search reached
  std::uint64_t nodes = 0;
};

// Renumber vertices in breadth-first order from vertex 0, visiting neighbors
// in ascending order.  Returns the relabeled graph and the permutation
// mapping new labels back to old ones.
std::pair<Graph, std::vector<int>> bfs_relabel(const Graph& g);

// Orientable genus of a connected graph.
GenusResult compute_genus(const Graph& g, const SearchOptions& opt = {});

// Decide genus(g) <= bound without determining the exact value.
DecideResult genus_at_most(const Graph& g, int bound,
                           const SearchOptions& opt = {});

// One embedding of minimum genus, or of the given genus if target is set
// (fails if no embedding of exactly that genus exists).
EmbeddingResult find_embedding(const Graph& g,
                               std::optional<int> target = std::nullopt,
                               const SearchOptions& opt = {});

// All embeddings of the given genus, counted up to relabeling of the
// oriented surface; mirror images are considered equal and reported once.
// Preprocessing never applies here.  emit may be empty.
CountResult enumerate_embeddings(
    const Graph& g, int target,
    const std::function<void(const RotationSystem&)>& emit = {},
    const SearchOptions& opt = {});

}  // namespace genus
