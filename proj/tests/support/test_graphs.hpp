#pragma once

#include <random>
#include <string>
#include <vector>

#include "genus/graph.hpp"

namespace genus::testing {

// --- fixed families ---------------------------------------------------------

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
Graph petersen();

// circulant-style cubic graph: Hamiltonian cycle 0..n-1 plus chords
// i -> i + pattern[i % pattern.size()]
Graph lcf(int n, const std::vector<int>& pattern, int repeats);

Graph tutte_coxeter();  // (3,8)-cage, 30 vertices
Graph gray_graph();     // 54 vertices
Graph folkman();        // 20 vertices, 4-regular
Graph doyle_holt();     // 27 vertices, 4-regular
Graph dual_menger();    // line intersections of the 3x3x3 grid, 6-regular
Graph max_matching_complement(int n);  // K_n minus a maximum matching
Graph triple_triangle_product();       // C3 x C3 x C3 Cartesian product

// --- corpora ----------------------------------------------------------------

// one graph per line, graph6; throws if the file is missing
std::vector<Graph> load_corpus(const std::string& filename);

// --- random models ----------------------------------------------------------

// spanning tree plus extra distinct edges; connected by construction
Graph random_connected(int n, int extra_edges, std::mt19937& rng);

// pairing model conditioned on simple and connected
Graph random_cubic(int n, std::mt19937& rng);

}  // namespace genus::testing
