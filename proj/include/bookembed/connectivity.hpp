#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bookembed/graph.hpp"
#include "bookembed/layout.hpp"

namespace bookembed {

// Blocks are sorted vertex lists ordered lexicographically; an isolated vertex
// forms a block of its own. incidence holds (cutpoint, block index) pairs.
struct BlockCutTree {
    std::vector<std::vector<Vertex>> blocks;
    std::vector<std::vector<Edge>> block_edges;
    std::vector<Vertex> cutpoints;
    std::vector<std::pair<Vertex, std::size_t>> incidence;
};

BlockCutTree blocks_and_cutpoints(const Graph &g);

// Cut vertices of g with the `removed` vertices deleted.
std::vector<Vertex> articulation_points(const Graph &g, const std::vector<bool> &removed);

// k in {2, 3}: no set of fewer than k vertices disconnects g. Exhaustive over
// vertex subsets. Throws TooSmall when g has at most k vertices.
bool is_k_connected(const Graph &g, int k);

// Every {u, v} whose deletion disconnects g, sorted. Throws NotTwoConnected.
std::vector<Edge> separating_pairs(const Graph &g);

// Splices per-block layouts along the block-cut forest. Root block: the one
// holding the smallest vertex; children are visited in ascending block index;
// components are concatenated. Page count is the maximum over blocks.
// Throws InvalidBlockLayout naming the first block whose layout fails
// verification.
BookLayout merge_layouts(const BlockCutTree &tree, const std::map<std::size_t, BookLayout> &per_block);

} // namespace bookembed
