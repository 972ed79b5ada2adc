#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "genus/graph.hpp"

namespace genus {

// Brute-force reference used by the test suites: enumerates all
// prod_v (deg(v)-1)! rotation systems of a graph and traces their faces
// directly from the definition.  Deliberately independent of the rotation
// and search machinery; shares only the Graph type.

struct OracleOptions {
  std::uint64_t budget = 100'000'000;  // max rotation systems to enumerate
};

struct OracleError : std::runtime_error {
  explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

// prod_v (deg(v)-1)!, saturating at uint64 max
std::uint64_t oracle_rotation_count(const Graph& g);

// min genus over all rotation systems
int oracle_genus(const Graph& g, const OracleOptions& opt = {});

// histogram[k] = number of labeled rotation systems of genus k
std::vector<std::uint64_t> oracle_genus_histogram(const Graph& g,
                                                  const OracleOptions& opt = {});

// rotation systems of the given genus counted once per mirror pair
std::uint64_t oracle_count(const Graph& g, int genus,
                           const OracleOptions& opt = {});

// faces of one explicitly given rotation (cyclic neighbor lists), traced
// independently of the main face walker
int oracle_face_count(const Graph& g,
                      const std::vector<std::vector<int>>& orders);

}  // namespace genus
