#pragma once

#include <map>
#include <vector>

#include "bookembed/graph.hpp"

namespace bookembed {

// Complete binary tree of the given depth, numbered level by level from the
// root (children of i are 2i+1 and 2i+2), plus a path through each level in
// left-to-right order.
Graph x_tree(int depth);

// x_tree plus an edge closing each level path into a cycle when the two ends
// are not already adjacent.
Graph extended_x_tree(int depth);

// rows x cols grid, numbered row-major.
Graph grid(int rows, int cols);

// Internal vertices of the path replacing each original edge, listed from
// edge.u to edge.v.
using SubdivisionMap = std::map<Edge, std::vector<Vertex>>;

struct Subdivision {
    Graph graph;
    SubdivisionMap paths;
};

// Replaces every edge by a path with `per_edge` internal vertices. New
// vertices follow the originals, edge by edge in sorted edge order.
Subdivision subdivide(const Graph &g, int per_edge);

// Inverse of subdivide: collapses each path back to its edge.
Graph contract(const Graph &subdivided, const SubdivisionMap &paths, int original_vertex_count);

} // namespace bookembed
