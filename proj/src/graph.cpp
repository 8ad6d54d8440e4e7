#include "bookembed/graph.hpp"

#include <algorithm>
#include <numeric>

#include "bookembed/error.hpp"

namespace bookembed {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NotPlaneEmbedding: return "NotPlaneEmbedding";
    case ErrorKind::InconsistentRotation: return "InconsistentRotation";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NotTwoConnected: return "NotTwoConnected";
    case ErrorKind::InvalidBlockLayout: return "InvalidBlockLayout";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::TraceMismatch: return "TraceMismatch";
    case ErrorKind::NotSubhamiltonianOrder: return "NotSubhamiltonianOrder";
    case ErrorKind::CoverageError: return "CoverageError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::NotNicelyPlanar: return "NotNicelyPlanar";
    case ErrorKind::InternalGuaranteeViolated: return "InternalGuaranteeViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidLayout: return "InvalidLayout";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string to_string(const Edge &e)
{
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

Graph::Graph(int vertex_count) : adjacency_(static_cast<std::size_t>(std::max(vertex_count, 0))) {}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count)
{
    edges_.reserve(edges.size());
    for (const Edge &e : edges) {
        if (e.u < 0 || e.v >= vertex_count)
            throw Error(ErrorKind::VertexOutOfRange, "edge " + to_string(e) + " with n=" + std::to_string(vertex_count));
        if (e.u == e.v)
            throw Error(ErrorKind::LoopEdge, "edge " + to_string(e));
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw Error(ErrorKind::DuplicateEdge, "edge " + to_string(*dup));
    for (const Edge &e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto &nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const
{
    if (!contains(a) || !contains(b))
        return false;
    const auto &nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::size_t Graph::edge_index(const Edge &e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return npos;
    return static_cast<std::size_t>(it - edges_.begin());
}

Graph build_graph(int vertex_count, std::span<const std::pair<int, int>> edge_list)
{
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(vertex_count));
        edges.emplace_back(a, b);
    }
    return Graph(vertex_count, edges);
}

Graph extend_graph(const Graph &g, int new_vertex_count, std::span<const Edge> extra_edges)
{
    std::vector<Edge> edges = g.edges();
    edges.insert(edges.end(), extra_edges.begin(), extra_edges.end());
    return Graph(std::max(new_vertex_count, g.vertex_count()), edges);
}

InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> vertices)
{
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge &e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0)
            edges.emplace_back(local[e.u], local[e.v]);
    return {Graph(static_cast<int>(vertices.size()), edges), std::vector<Vertex>(vertices.begin(), vertices.end())};
}

Components connected_components(const Graph &g)
{
    return connected_components(g, std::vector<bool>(static_cast<std::size_t>(g.vertex_count()), false));
}

Components connected_components(const Graph &g, const std::vector<bool> &removed)
{
    Components out;
    out.label.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (removed[s] || out.label[s] >= 0)
            continue;
        out.label[s] = out.count;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x))
                if (!removed[y] && out.label[y] < 0) {
                    out.label[y] = out.count;
                    stack.push_back(y);
                }
        }
        ++out.count;
    }
    return out;
}

namespace {

std::size_t rotation_index(const std::vector<Vertex> &rot, Vertex x)
{
    auto it = std::find(rot.begin(), rot.end(), x);
    return static_cast<std::size_t>(it - rot.begin());
}

} // namespace

std::vector<Vertex> face_walk(const RotationSystem &rs, Vertex from, Vertex to)
{
    std::vector<Vertex> walk;
    Vertex a = from, b = to;
    do {
        walk.push_back(a);
        const auto &rot = rs.rotation[b];
        std::size_t i = rotation_index(rot, a);
        if (i == rot.size())
            throw Error(ErrorKind::InconsistentRotation,
                        "vertex " + std::to_string(a) + " missing from rotation of " + std::to_string(b));
        Vertex c = rot[(i + 1) % rot.size()];
        a = b;
        b = c;
        if (walk.size() > 4 * (rs.rotation.size() + 1) * (rs.rotation.size() + 1))
            throw Error(ErrorKind::InconsistentRotation, "face walk does not close");
    } while (a != from || b != to);
    return walk;
}

FaceSet validate_embedding(const Graph &g, const RotationSystem &rs)
{
    const int n = g.vertex_count();
    if (static_cast<int>(rs.rotation.size()) != n)
        throw Error(ErrorKind::InconsistentRotation,
                    "rotation covers " + std::to_string(rs.rotation.size()) + " vertices, graph has " + std::to_string(n));

    // Dart v -> rotation[v][i] gets id offset[v] + i.
    std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
    // position[v] holds (neighbor, index in rotation[v]) sorted by neighbor.
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> position(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const auto &rot = rs.rotation[v];
        std::vector<Vertex> sorted(rot.begin(), rot.end());
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v)) {
            std::string detail = "rotation at " + std::to_string(v) + " does not list exactly its neighbors";
            for (Vertex x : g.neighbors(v))
                if (!std::binary_search(sorted.begin(), sorted.end(), x)) {
                    detail = "edge " + to_string(Edge(v, x)) + " missing from rotation at " + std::to_string(v);
                    break;
                }
            throw Error(ErrorKind::InconsistentRotation, detail);
        }
        offset[v + 1] = offset[v] + rot.size();
        for (std::size_t i = 0; i < rot.size(); ++i)
            position[v].emplace_back(rot[i], i);
        std::sort(position[v].begin(), position[v].end());
    }
    auto index_in = [&](Vertex v, Vertex x) {
        auto it = std::lower_bound(position[v].begin(), position[v].end(), std::make_pair(x, std::size_t{0}));
        return it->second;
    };

    FaceSet out;
    std::vector<bool> used(offset[n], false);
    for (Vertex s = 0; s < n; ++s) {
        for (std::size_t i = 0; i < rs.rotation[s].size(); ++i) {
            if (used[offset[s] + i])
                continue;
            std::vector<Vertex> walk;
            Vertex a = s;
            std::size_t ai = i;
            while (!used[offset[a] + ai]) {
                used[offset[a] + ai] = true;
                walk.push_back(a);
                Vertex b = rs.rotation[a][ai];
                const auto &rot_b = rs.rotation[b];
                std::size_t back = index_in(b, a);
                ai = (back + 1) % rot_b.size();
                a = b;
            }
            out.faces.push_back(std::move(walk));
        }
    }

    const Components comps = connected_components(g);
    int isolated = 0;
    for (Vertex v = 0; v < n; ++v)
        isolated += g.degree(v) == 0 ? 1 : 0;
    const long long euler = static_cast<long long>(n) - static_cast<long long>(g.edge_count()) +
                            static_cast<long long>(out.faces.size()) + isolated;
    // Each component is plane on its own: V_i - E_i + F_i = 2, an isolated
    // vertex contributing one face.
    if (euler != 2LL * comps.count)
        throw Error(ErrorKind::NotPlaneEmbedding, "V - E + F = " + std::to_string(euler) + ", expected " +
                                                      std::to_string(2 * comps.count));

    std::size_t best = 0;
    for (std::size_t f = 1; f < out.faces.size(); ++f) {
        const auto &cand = out.faces[f];
        const auto &cur = out.faces[best];
        if (cand.size() > cur.size() ||
            (cand.size() == cur.size() &&
             *std::min_element(cand.begin(), cand.end()) < *std::min_element(cur.begin(), cur.end())))
            best = f;
    }
    out.outer_face = best;
    return out;
}

} // namespace bookembed
