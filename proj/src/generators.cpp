#include "bookembed/generators.hpp"

#include "bookembed/error.hpp"

namespace bookembed {

namespace {

std::vector<Edge> x_tree_edges(int depth)
{
    std::vector<Edge> edges;
    const int n = (1 << (depth + 1)) - 1;
    for (int v = 0; 2 * v + 2 < n; ++v) {
        edges.emplace_back(v, 2 * v + 1);
        edges.emplace_back(v, 2 * v + 2);
    }
    for (int level = 1; level <= depth; ++level) {
        int first = (1 << level) - 1;
        int last = (1 << (level + 1)) - 2;
        for (int v = first; v < last; ++v)
            edges.emplace_back(v, v + 1);
    }
    return edges;
}

void require_depth(int depth)
{
    if (depth < 0 || depth > 20)
        throw Error(ErrorKind::PreconditionViolated, "depth must be in 0..20");
}

} // namespace

Graph x_tree(int depth)
{
    require_depth(depth);
    return Graph((1 << (depth + 1)) - 1, x_tree_edges(depth));
}

Graph extended_x_tree(int depth)
{
    require_depth(depth);
    const int n = (1 << (depth + 1)) - 1;
    std::vector<Edge> edges = x_tree_edges(depth);
    const Graph base(n, edges);
    for (int level = 1; level <= depth; ++level) {
        int first = (1 << level) - 1;
        int last = (1 << (level + 1)) - 2;
        if (!base.has_edge(first, last))
            edges.emplace_back(first, last);
    }
    return Graph(n, edges);
}

Graph grid(int rows, int cols)
{
    if (rows < 1 || cols < 1)
        throw Error(ErrorKind::PreconditionViolated, "grid dimensions must be positive");
    std::vector<Edge> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols)
                edges.emplace_back(v, v + 1);
            if (r + 1 < rows)
                edges.emplace_back(v, v + cols);
        }
    return Graph(rows * cols, edges);
}

Subdivision subdivide(const Graph &g, int per_edge)
{
    if (per_edge < 0)
        throw Error(ErrorKind::PreconditionViolated, "per-edge subdivision count must be non-negative");
    Subdivision out;
    std::vector<Edge> edges;
    int next = g.vertex_count();
    for (const Edge &e : g.edges()) {
        std::vector<Vertex> path;
        Vertex prev = e.u;
        for (int i = 0; i < per_edge; ++i) {
            path.push_back(next);
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, e.v);
        out.paths[e] = std::move(path);
    }
    out.graph = Graph(next, edges);
    return out;
}

Graph contract(const Graph &subdivided, const SubdivisionMap &paths, int original_vertex_count)
{
    std::vector<Edge> edges;
    std::size_t path_edges = 0;
    for (const auto &[e, path] : paths) {
        Vertex prev = e.u;
        for (Vertex x : path) {
            if (!subdivided.has_edge(prev, x))
                throw Error(ErrorKind::TraceMismatch, "subdivision path for " + to_string(e) + " is broken");
            prev = x;
        }
        if (!subdivided.has_edge(prev, e.v))
            throw Error(ErrorKind::TraceMismatch, "subdivision path for " + to_string(e) + " is broken");
        path_edges += path.size() + 1;
        edges.push_back(e);
    }
    if (path_edges != subdivided.edge_count())
        throw Error(ErrorKind::TraceMismatch, "subdivided graph has edges outside the recorded paths");
    return Graph(original_vertex_count, edges);
}

} // namespace bookembed
