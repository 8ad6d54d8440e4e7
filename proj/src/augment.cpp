#include "bookembed/augment.hpp"

#include <algorithm>
#include <set>

#include "bookembed/connectivity.hpp"
#include "bookembed/error.hpp"
#include "bookembed/planar.hpp"

namespace bookembed {

std::vector<Triangle> enumerate_triangles(const Graph &g)
{
    std::vector<Triangle> out;
    for (const Edge &e : g.edges()) {
        const auto &a = g.neighbors(e.u);
        const auto &b = g.neighbors(e.v);
        // Common neighbors above e.v, so each triangle is reported once.
        auto ia = std::upper_bound(a.begin(), a.end(), e.v);
        auto ib = std::upper_bound(b.begin(), b.end(), e.v);
        while (ia != a.end() && ib != b.end()) {
            if (*ia < *ib) {
                ++ia;
            } else if (*ib < *ia) {
                ++ib;
            } else {
                out.push_back({e.u, e.v, *ia});
                ++ia;
                ++ib;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Triangle> separating_triangles(const Graph &g)
{
    const int base = connected_components(g).count;
    std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<Triangle> out;
    for (const Triangle &t : enumerate_triangles(g)) {
        for (Vertex v : t)
            removed[v] = true;
        if (connected_components(g, removed).count > base)
            out.push_back(t);
        for (Vertex v : t)
            removed[v] = false;
    }
    return out;
}

bool is_nicely_planar_block(const Graph &g)
{
    if (g.vertex_count() <= 2)
        return true;
    if (!is_k_connected(g, 2))
        throw Error(ErrorKind::NotTwoConnected, "nicely planar test applies to blocks");
    if (!planar_embed(g))
        throw Error(ErrorKind::NotPlanar, "graph is not planar");
    return separating_triangles(g).empty();
}

namespace {

// Places a new vertex inside the face bounded by `walk` and joins it to the
// walk entries at `corners` (ascending positions). At each corner the new
// vertex goes right after the walk predecessor; its own rotation lists the
// corners in reverse walk order, which keeps every new face consistent with
// the traversal rule.
Vertex insert_in_face(RotationSystem &rs, const std::vector<Vertex> &walk, const std::vector<std::size_t> &corners)
{
    const auto y = static_cast<Vertex>(rs.rotation.size());
    const std::size_t len = walk.size();
    for (std::size_t i : corners) {
        Vertex w = walk[i];
        Vertex prev = walk[(i + len - 1) % len];
        auto &rot = rs.rotation[w];
        auto it = std::find(rot.begin(), rot.end(), prev);
        rot.insert(std::next(it), y);
    }
    std::vector<Vertex> own;
    for (auto it = corners.rbegin(); it != corners.rend(); ++it)
        own.push_back(walk[*it]);
    rs.rotation.push_back(std::move(own));
    return y;
}

bool has_repeat(std::vector<Vertex> walk)
{
    std::sort(walk.begin(), walk.end());
    return std::adjacent_find(walk.begin(), walk.end()) != walk.end();
}

} // namespace

Augmented augment_to_three_connected(const Graph &g, const RotationSystem &rs)
{
    try {
        validate_embedding(g, rs);
    } catch (const Error &err) {
        throw Error(ErrorKind::PreconditionViolated, std::string("embedding: ") + err.what());
    }
    if (g.vertex_count() < 3 || !is_k_connected(g, 2))
        throw Error(ErrorKind::PreconditionViolated, "input must be 2-connected with at least 3 vertices");
    if (auto sep = separating_triangles(g); !sep.empty())
        throw Error(ErrorKind::PreconditionViolated,
                    "separating triangle {" + std::to_string(sep[0][0]) + "," + std::to_string(sep[0][1]) + "," +
                        std::to_string(sep[0][2]) + "}");

    Augmented out;
    out.trace.original_vertex_count = g.vertex_count();
    out.rotation = rs;
    Graph cur = g;

    while (true) {
        const std::vector<Edge> pairs = separating_pairs(cur);
        if (!out.separating_pair_history.empty() && pairs.size() >= out.separating_pair_history.back())
            throw Error(ErrorKind::InternalGuaranteeViolated, "separating pair count did not decrease");
        out.separating_pair_history.push_back(pairs.size());
        if (pairs.empty())
            break;

        const Edge pick = pairs.front();
        Vertex v = pick.u, u = pick.v;
        if (cur.degree(u) > cur.degree(v))
            std::swap(u, v);

        std::vector<bool> removed(static_cast<std::size_t>(cur.vertex_count()), false);
        removed[u] = removed[v] = true;
        const Components comps = connected_components(cur, removed);

        // Neighbors of v in rotation order, anchored after u when uv is an
        // edge and at the lowest-id neighbor otherwise.
        const std::vector<Vertex> &rot_v = out.rotation.rotation[v];
        const bool joined = cur.has_edge(u, v);
        std::size_t start = 0;
        if (joined) {
            start = static_cast<std::size_t>(std::find(rot_v.begin(), rot_v.end(), u) - rot_v.begin()) + 1;
        } else {
            start = static_cast<std::size_t>(std::min_element(rot_v.begin(), rot_v.end()) - rot_v.begin());
        }
        std::vector<Vertex> seq;
        for (std::size_t k = 0; k < rot_v.size(); ++k) {
            Vertex x = rot_v[(start + k) % rot_v.size()];
            if (x != u)
                seq.push_back(x);
        }
        if (!joined) {
            // Begin at the first neighbor of the component holding the anchor.
            for (std::size_t guard = 0; guard < seq.size() && comps.label[seq.front()] == comps.label[seq.back()];
                 ++guard)
                std::rotate(seq.rbegin(), seq.rbegin() + 1, seq.rend());
        }
        std::vector<std::vector<Vertex>> runs;
        for (Vertex x : seq) {
            if (runs.empty() || comps.label[runs.back().back()] != comps.label[x])
                runs.emplace_back();
            runs.back().push_back(x);
        }
        if (static_cast<int>(runs.size()) != comps.count)
            throw Error(ErrorKind::InternalGuaranteeViolated,
                        "components around vertex " + std::to_string(v) + " are not contiguous in the rotation");

        std::vector<Edge> new_edges;
        int next_id = cur.vertex_count();
        for (std::size_t j = 0; j + 1 < runs.size(); ++j) {
            Vertex last = runs[j].back();
            Vertex first = runs[j + 1].front();
            const std::vector<Vertex> walk = face_walk(out.rotation, last, v);
            if (walk.size() < 3 || walk[2] != first)
                throw Error(ErrorKind::InternalGuaranteeViolated, "bridge face does not contain the expected corner");
            Vertex y = insert_in_face(out.rotation, walk, {0, 1, 2});
            if (y != next_id++)
                throw Error(ErrorKind::InternalGuaranteeViolated, "bridge vertex id out of sequence");
            out.trace.added_vertices.push_back({y, AddedKind::SeparationBridge, {v, last, first}});
            for (Vertex x : {last, v, first}) {
                new_edges.emplace_back(x, y);
                out.trace.added_edges.emplace_back(x, y);
            }
        }
        cur = extend_graph(cur, next_id, new_edges);
    }

    validate_embedding(cur, out.rotation);
    out.graph = std::move(cur);
    return out;
}

Augmented stellate(const Graph &g, const RotationSystem &rs)
{
    const FaceSet fs = validate_embedding(g, rs);
    if (g.vertex_count() < 3 || !is_k_connected(g, 2))
        throw Error(ErrorKind::NotTwoConnected, "stellation needs a 2-connected graph with at least 3 vertices");

    Augmented out;
    out.trace.original_vertex_count = g.vertex_count();
    out.rotation = rs;
    std::vector<Edge> new_edges;
    for (const auto &walk : fs.faces) {
        if (walk.size() <= 3)
            continue;
        if (has_repeat(walk))
            throw Error(ErrorKind::NotTwoConnected, "face boundary repeats a vertex");
        std::vector<std::size_t> corners(walk.size());
        for (std::size_t i = 0; i < walk.size(); ++i)
            corners[i] = i;
        Vertex y = insert_in_face(out.rotation, walk, corners);
        out.trace.added_vertices.push_back({y, AddedKind::Stellation, walk});
        for (Vertex x : walk) {
            new_edges.emplace_back(x, y);
            out.trace.added_edges.emplace_back(x, y);
        }
    }
    out.graph = extend_graph(g, static_cast<int>(out.rotation.rotation.size()), new_edges);
    const FaceSet result = validate_embedding(out.graph, out.rotation);
    for (const auto &f : result.faces)
        if (f.size() != 3)
            throw Error(ErrorKind::InternalGuaranteeViolated, "stellation left a face of length " + std::to_string(f.size()));
    return out;
}

AugmentationTrace compose(const AugmentationTrace &first, const AugmentationTrace &second)
{
    if (second.original_vertex_count !=
        first.original_vertex_count + static_cast<int>(first.added_vertices.size()))
        throw Error(ErrorKind::TraceMismatch, "second trace does not start where the first ends");
    AugmentationTrace out = first;
    out.added_vertices.insert(out.added_vertices.end(), second.added_vertices.begin(), second.added_vertices.end());
    out.added_edges.insert(out.added_edges.end(), second.added_edges.begin(), second.added_edges.end());
    return out;
}

Restored rollback(const Graph &g, const RotationSystem &rs, const AugmentationTrace &trace)
{
    const int n0 = trace.original_vertex_count;
    if (g.vertex_count() != n0 + static_cast<int>(trace.added_vertices.size()))
        throw Error(ErrorKind::TraceMismatch, "vertex count does not match the trace");
    for (std::size_t i = 0; i < trace.added_vertices.size(); ++i)
        if (trace.added_vertices[i].id != n0 + static_cast<int>(i))
            throw Error(ErrorKind::TraceMismatch, "added vertex ids are not dense");

    std::set<Edge> added(trace.added_edges.begin(), trace.added_edges.end());
    std::vector<Edge> kept;
    for (const Edge &e : g.edges()) {
        bool touches = e.v >= n0;
        if (touches != (added.count(e) > 0))
            throw Error(ErrorKind::TraceMismatch, "edge " + to_string(e) + " disagrees with the trace");
        if (!touches)
            kept.push_back(e);
    }
    if (added.size() != trace.added_edges.size() ||
        g.edge_count() - kept.size() != added.size())
        throw Error(ErrorKind::TraceMismatch, "trace lists edges absent from the graph");

    Restored out{Graph(n0, kept), {}};
    out.rotation.rotation.resize(static_cast<std::size_t>(n0));
    for (Vertex v = 0; v < n0; ++v)
        for (Vertex x : rs.rotation[v])
            if (x < n0)
                out.rotation.rotation[v].push_back(x);
    return out;
}

} // namespace bookembed
