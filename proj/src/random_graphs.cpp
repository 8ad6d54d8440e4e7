#include "bookembed/random_graphs.hpp"

#include <algorithm>
#include <array>

#include "bookembed/augment.hpp"
#include "bookembed/error.hpp"
#include "bookembed/planar.hpp"

namespace bookembed::random_graphs {

namespace {

int uniform(Rng &rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng &rng, double p)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::vector<Edge> stacked_edges(int n, Rng &rng)
{
    if (n < 3)
        throw Error(ErrorKind::PreconditionViolated, "stacked triangulation needs at least 3 vertices");
    std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (Vertex v = 3; v < n; ++v) {
        auto f = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(faces.size()) - 1));
        auto [a, b, c] = faces[f];
        edges.emplace_back(a, v);
        edges.emplace_back(b, v);
        edges.emplace_back(c, v);
        faces[f] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({a, c, v});
    }
    return edges;
}

} // namespace

Graph stacked_triangulation(int n, Rng &rng)
{
    return Graph(n, stacked_edges(n, rng));
}

Graph planar_subgraph(int n, double keep, Rng &rng)
{
    if (n < 3) {
        std::vector<Edge> edges;
        if (n == 2 && coin(rng, keep))
            edges.emplace_back(0, 1);
        return Graph(std::max(n, 0), edges);
    }
    std::vector<Edge> kept;
    for (const Edge &e : stacked_edges(n, rng))
        if (coin(rng, keep))
            kept.push_back(e);
    return Graph(n, kept);
}

Graph planar_bipartite(int n, Rng &rng)
{
    const auto edges = stacked_edges(n, rng);
    std::vector<int> side(static_cast<std::size_t>(n));
    for (auto &s : side)
        s = uniform(rng, 0, 1);
    std::vector<Edge> kept;
    for (const Edge &e : edges)
        if (side[e.u] != side[e.v])
            kept.push_back(e);
    return Graph(n, kept);
}

Graph nicely_planar_block(int n, Rng &rng)
{
    if (n < 3)
        throw Error(ErrorKind::PreconditionViolated, "blocks need at least 3 vertices");
    for (int attempt = 0;; ++attempt) {
        int count = std::min(n, uniform(rng, 3, 6));
        std::vector<Edge> edges;
        for (Vertex v = 0; v < count; ++v)
            edges.emplace_back(v, (v + 1) % count);
        Graph g(count, edges);
        int target = uniform(rng, count, n);
        int steps = 0;
        while (steps++ < 4 * n) {
            auto rs = planar_embed(g);
            FaceSet fs = faces(g, *rs);
            const auto &walk = fs.faces[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(fs.faces.size()) - 1))];
            int i = uniform(rng, 0, static_cast<int>(walk.size()) - 1);
            int j = uniform(rng, 0, static_cast<int>(walk.size()) - 1);
            Vertex a = walk[static_cast<std::size_t>(i)], b = walk[static_cast<std::size_t>(j)];
            if (a == b)
                continue;
            int room = n - count;
            int internal = room == 0 ? 0 : uniform(rng, 0, std::min(room, 3));
            if (internal == 0 && (g.has_edge(a, b) || count < target))
                continue;
            std::vector<Edge> path;
            Vertex prev = a;
            for (int k = 0; k < internal; ++k) {
                path.emplace_back(prev, count);
                prev = count++;
            }
            path.emplace_back(prev, b);
            g = extend_graph(g, count, path);
            if (count >= target && coin(rng, 0.25))
                break;
        }
        if (separating_triangles(g).empty())
            return g;
        if (attempt > 1000)
            throw Error(ErrorKind::InternalGuaranteeViolated, "could not sample a nicely planar block");
    }
}

Graph two_connected(int k, double p, Rng &rng)
{
    if (k < 2)
        throw Error(ErrorKind::PreconditionViolated, "blocks need at least 2 vertices");
    std::vector<Edge> edges;
    if (k == 2)
        return Graph(2, std::vector<Edge>{{0, 1}});
    for (Vertex v = 0; v < k; ++v)
        edges.emplace_back(v, (v + 1) % k);
    for (Vertex a = 0; a < k; ++a)
        for (Vertex b = a + 2; b < k; ++b)
            if (!(a == 0 && b == k - 1) && coin(rng, p))
                edges.emplace_back(a, b);
    return Graph(k, edges);
}

Graph glue_at_cutpoints(const std::vector<Graph> &blocks, Rng &rng)
{
    std::vector<Edge> edges;
    int count = 0;
    for (const Graph &b : blocks) {
        std::vector<Vertex> id(static_cast<std::size_t>(b.vertex_count()));
        if (count == 0) {
            for (Vertex v = 0; v < b.vertex_count(); ++v)
                id[v] = count++;
        } else {
            Vertex shared = uniform(rng, 0, count - 1);
            Vertex local = uniform(rng, 0, b.vertex_count() - 1);
            for (Vertex v = 0; v < b.vertex_count(); ++v)
                id[v] = v == local ? shared : count++;
        }
        for (const Edge &e : b.edges())
            edges.emplace_back(id[e.u], id[e.v]);
    }
    return Graph(count, edges);
}

} // namespace bookembed::random_graphs
