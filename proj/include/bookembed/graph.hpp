#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bookembed {

using Vertex = int;

// Unordered vertex pair stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool has(Vertex x) const { return x == u || x == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge &, const Edge &) = default;
    friend bool operator==(const Edge &, const Edge &) = default;
};

std::string to_string(const Edge &e);

// Finite simple undirected graph on the dense vertex range 0..n-1.
// Immutable once built; neighbor lists and the edge list are kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    // Validates the simple-graph invariants; throws LoopEdge, DuplicateEdge or
    // VertexOutOfRange naming the offending pair.
    Graph(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<Vertex> &neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(Vertex a, Vertex b) const;
    bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

    // Index of e in edges(), or npos.
    std::size_t edge_index(const Edge &e) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const Graph &a, const Graph &b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

Graph build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_list);

// New graph with extra vertices and edges appended; the extra edges must keep
// the graph simple.
Graph extend_graph(const Graph &g, int new_vertex_count, std::span<const Edge> extra_edges);

// Subgraph induced on `vertices` (sorted, distinct), relabelled densely in the
// given order. local_to_global[i] is the original id of local vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> local_to_global;
};
InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

// Component label per vertex; vertices with removed[v] set get label -1.
struct Components {
    std::vector<int> label;
    int count = 0;
};
Components connected_components(const Graph &g);
Components connected_components(const Graph &g, const std::vector<bool> &removed);

// Plane embedding as a cyclic order of neighbors per vertex, read clockwise.
struct RotationSystem {
    std::vector<std::vector<Vertex>> rotation;
    friend bool operator==(const RotationSystem &, const RotationSystem &) = default;
};

// Closed boundary walks of an embedding. Each directed edge (u, v) appears in
// exactly one walk as consecutive entries u, v (cyclically).
struct FaceSet {
    std::vector<std::vector<Vertex>> faces;
    std::size_t outer_face = 0;
};

// Face traversal: from directed edge (u, v) continue with (v, w) where w is
// the neighbor immediately after u in rotation(v).
//
// Checks that the rotation covers exactly the edges of g and that the Euler
// relation V - E + F = 1 + C holds, counting an isolated vertex as a face of
// its own. The outer face defaults to a longest walk, ties broken by the
// smallest vertex on the walk.
FaceSet validate_embedding(const Graph &g, const RotationSystem &rs);

// The boundary walk that begins with the directed edge (from, to).
std::vector<Vertex> face_walk(const RotationSystem &rs, Vertex from, Vertex to);

} // namespace bookembed
