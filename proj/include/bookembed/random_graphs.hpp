#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bookembed/graph.hpp"

// Seeded generators for test corpora. Output depends only on the seed and the
// standard library's distribution implementations.
namespace bookembed::random_graphs {

using Rng = std::mt19937_64;

// Maximal planar graph grown by repeatedly inserting a vertex into a random
// triangular face, starting from a triangle.
Graph stacked_triangulation(int n, Rng &rng);

// Each edge of a stacked triangulation kept with probability keep.
Graph planar_subgraph(int n, double keep, Rng &rng);

// Edges of a stacked triangulation whose endpoints get different random
// colors; planar and bipartite, possibly disconnected.
Graph planar_bipartite(int n, Rng &rng);

// 2-connected planar graph without separating triangles on at most n
// vertices, grown from a cycle by adding chords and paths inside faces.
Graph nicely_planar_block(int n, Rng &rng);

// Cycle through all k vertices plus each remaining pair with probability p;
// 2-connected for k >= 3, a single edge for k == 2. Not necessarily planar.
Graph two_connected(int k, double p, Rng &rng);

// Glues the blocks one after another, identifying a vertex of each new block
// with a random vertex already placed.
Graph glue_at_cutpoints(const std::vector<Graph> &blocks, Rng &rng);

} // namespace bookembed::random_graphs
