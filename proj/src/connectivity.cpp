#include "bookembed/connectivity.hpp"

#include <algorithm>
#include <list>
#include <set>

#include "bookembed/error.hpp"

namespace bookembed {

namespace {

struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
};

} // namespace

BlockCutTree blocks_and_cutpoints(const Graph &g)
{
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<Edge>> raw_blocks;
    int timer = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            raw_blocks.push_back({});
            raw_blocks.back().push_back(Edge(root, root));  // marker for an isolated vertex
            continue;
        }
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame &f = stack.back();
            const auto &nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                Vertex w = nbrs[f.next++];
                if (disc[w] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty())
                break;
            Vertex v = stack.back().v;
            low[v] = std::min(low[v], low[done.v]);
            if (low[done.v] >= disc[v]) {
                std::vector<Edge> block;
                const Edge tree_edge(v, done.v);
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e);
                    if (e == tree_edge)
                        break;
                }
                raw_blocks.push_back(std::move(block));
            }
        }
    }

    struct Block {
        std::vector<Vertex> vertices;
        std::vector<Edge> edges;
    };
    std::vector<Block> blocks;
    for (auto &raw : raw_blocks) {
        Block b;
        if (raw.size() == 1 && raw[0].u == raw[0].v) {
            b.vertices = {raw[0].u};
        } else {
            std::set<Vertex> vs;
            for (const Edge &e : raw) {
                vs.insert(e.u);
                vs.insert(e.v);
            }
            b.vertices.assign(vs.begin(), vs.end());
            b.edges = std::move(raw);
            std::sort(b.edges.begin(), b.edges.end());
        }
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block &a, const Block &b) { return a.vertices < b.vertices; });

    BlockCutTree tree;
    std::vector<int> membership(static_cast<std::size_t>(n), 0);
    for (auto &b : blocks) {
        for (Vertex v : b.vertices)
            ++membership[v];
        tree.blocks.push_back(std::move(b.vertices));
        tree.block_edges.push_back(std::move(b.edges));
    }
    for (Vertex v = 0; v < n; ++v)
        if (membership[v] >= 2)
            tree.cutpoints.push_back(v);
    for (std::size_t i = 0; i < tree.blocks.size(); ++i)
        for (Vertex v : tree.blocks[i])
            if (membership[v] >= 2)
                tree.incidence.emplace_back(v, i);
    std::sort(tree.incidence.begin(), tree.incidence.end());
    return tree;
}

std::vector<Vertex> articulation_points(const Graph &g, const std::vector<bool> &removed)
{
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
    int timer = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (removed[root] || disc[root] >= 0)
            continue;
        int root_children = 0;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame &f = stack.back();
            const auto &nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                Vertex w = nbrs[f.next++];
                if (removed[w])
                    continue;
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    if (f.v == root)
                        ++root_children;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Vertex child = f.v;
            stack.pop_back();
            if (stack.empty())
                break;
            Vertex v = stack.back().v;
            low[v] = std::min(low[v], low[child]);
            if (v != root && low[child] >= disc[v])
                is_cut[v] = true;
        }
        if (root_children >= 2)
            is_cut[root] = true;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[v])
            out.push_back(v);
    return out;
}

bool is_k_connected(const Graph &g, int k)
{
    if (k != 2 && k != 3)
        throw Error(ErrorKind::PreconditionViolated, "k must be 2 or 3");
    const int n = g.vertex_count();
    if (n <= k)
        throw Error(ErrorKind::TooSmall, std::to_string(n) + " vertices for k=" + std::to_string(k));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    if (connected_components(g, removed).count != 1)
        return false;
    for (Vertex a = 0; a < n; ++a) {
        removed[a] = true;
        if (connected_components(g, removed).count != 1)
            return false;
        if (k == 3)
            for (Vertex b = a + 1; b < n; ++b) {
                removed[b] = true;
                bool split = connected_components(g, removed).count != 1;
                removed[b] = false;
                if (split)
                    return false;
            }
        removed[a] = false;
    }
    return true;
}

std::vector<Edge> separating_pairs(const Graph &g)
{
    const int n = g.vertex_count();
    if (n < 3 || !is_k_connected(g, 2))
        throw Error(ErrorKind::NotTwoConnected, "separating pairs need a 2-connected graph");
    std::vector<Edge> out;
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (Vertex x = 0; x < n; ++x) {
        removed[x] = true;
        for (Vertex y : articulation_points(g, removed))
            if (y > x)
                out.emplace_back(x, y);
        removed[x] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Renumbers pages to 1..k preserving their relative order.
std::map<Edge, int> compact_pages(const std::map<Edge, int> &pages)
{
    std::set<int> used;
    for (const auto &[e, p] : pages)
        used.insert(p);
    std::map<int, int> rank;
    int next = 0;
    for (int p : used)
        rank[p] = ++next;
    std::map<Edge, int> out;
    for (const auto &[e, p] : pages)
        out[e] = rank[p];
    return out;
}

void check_block_layout(const BlockCutTree &tree, std::size_t b, const BookLayout &layout)
{
    const auto &verts = tree.blocks[b];
    auto local = [&](Vertex v) {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        return (it != verts.end() && *it == v) ? static_cast<Vertex>(it - verts.begin()) : -1;
    };
    std::vector<Edge> edges;
    for (const Edge &e : tree.block_edges[b])
        edges.emplace_back(local(e.u), local(e.v));
    const Graph block(static_cast<int>(verts.size()), edges);

    BookLayout mapped;
    std::vector<Vertex> spine;
    for (Vertex v : layout.spine.order()) {
        Vertex l = local(v);
        if (l < 0)
            throw Error(ErrorKind::InvalidBlockLayout,
                        "block " + std::to_string(b) + ": spine vertex " + std::to_string(v) + " not in block");
        spine.push_back(l);
    }
    mapped.spine = CyclicOrder(spine);
    for (const auto &[e, p] : layout.pages) {
        Vertex a = local(e.u), c = local(e.v);
        if (a < 0 || c < 0)
            throw Error(ErrorKind::InvalidBlockLayout,
                        "block " + std::to_string(b) + ": edge " + to_string(e) + " not in block");
        mapped.pages[Edge(a, c)] = p;
    }
    try {
        if (!verify_layout(block, mapped).empty())
            throw Error(ErrorKind::InvalidBlockLayout, "block " + std::to_string(b) + ": crossing chords on one page");
    } catch (const Error &err) {
        if (err.kind() == ErrorKind::InvalidBlockLayout)
            throw;
        throw Error(ErrorKind::InvalidBlockLayout, "block " + std::to_string(b) + ": " + err.what());
    }
}

} // namespace

BookLayout merge_layouts(const BlockCutTree &tree, const std::map<std::size_t, BookLayout> &per_block)
{
    const std::size_t block_count = tree.blocks.size();
    for (std::size_t b = 0; b < block_count; ++b) {
        auto it = per_block.find(b);
        if (it == per_block.end())
            throw Error(ErrorKind::InvalidBlockLayout, "block " + std::to_string(b) + " has no layout");
        check_block_layout(tree, b, it->second);
    }

    // Block adjacency through cutpoints: (neighbor block, shared cutpoint).
    std::map<Vertex, std::vector<std::size_t>> blocks_at;
    for (auto [c, b] : tree.incidence)
        blocks_at[c].push_back(b);
    std::vector<std::vector<std::pair<std::size_t, Vertex>>> neighbors(block_count);
    for (const auto &[c, bs] : blocks_at)
        for (std::size_t a : bs)
            for (std::size_t b : bs)
                if (a != b)
                    neighbors[a].emplace_back(b, c);
    for (auto &nb : neighbors)
        std::sort(nb.begin(), nb.end());

    Vertex top = -1;
    for (const auto &bv : tree.blocks)
        if (!bv.empty())
            top = std::max(top, bv.back());
    std::vector<std::list<Vertex>::iterator> where(static_cast<std::size_t>(top + 1));

    std::list<Vertex> spine;
    std::map<Edge, int> pages;
    std::vector<bool> placed(block_count, false);
    std::vector<bool> vertex_placed(static_cast<std::size_t>(top + 1), false);

    auto add_pages = [&](std::size_t b) {
        for (const auto &[e, p] : compact_pages(per_block.at(b).pages))
            pages[e] = p;
    };
    // Orders the block's spine cyclically starting at `first`.
    auto rotated = [&](std::size_t b, Vertex first) {
        std::vector<Vertex> order = per_block.at(b).spine.order();
        auto it = std::find(order.begin(), order.end(), first);
        std::rotate(order.begin(), it, order.end());
        return order;
    };

    for (Vertex start = 0; start <= top; ++start) {
        if (vertex_placed[start])
            continue;
        std::size_t root = block_count;
        for (std::size_t b = 0; b < block_count; ++b)
            if (std::binary_search(tree.blocks[b].begin(), tree.blocks[b].end(), start)) {
                root = b;
                break;
            }
        if (root == block_count)
            continue;

        placed[root] = true;
        for (Vertex v : rotated(root, start)) {
            where[v] = spine.insert(spine.end(), v);
            vertex_placed[v] = true;
        }
        add_pages(root);

        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto &[b, next] = stack.back();
            if (next == neighbors[b].size()) {
                stack.pop_back();
                continue;
            }
            auto [child, cut] = neighbors[b][next++];
            if (placed[child])
                continue;
            placed[child] = true;
            auto order = rotated(child, cut);
            auto pos = std::next(where[cut]);
            for (std::size_t i = 1; i < order.size(); ++i) {
                where[order[i]] = spine.insert(pos, order[i]);
                vertex_placed[order[i]] = true;
            }
            add_pages(child);
            stack.emplace_back(child, 0);
        }
    }

    BookLayout out;
    out.spine = CyclicOrder(std::vector<Vertex>(spine.begin(), spine.end()));
    out.pages = std::move(pages);
    out.page_count = count_pages(out.pages);
    return out;
}

} // namespace bookembed
