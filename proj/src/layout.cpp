#include "bookembed/layout.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <set>
#include <thread>

#include "bookembed/error.hpp"

namespace bookembed {

CyclicOrder::CyclicOrder(std::vector<Vertex> order) : order_(std::move(order))
{
    if (order_.empty())
        return;
    auto smallest = std::min_element(order_.begin(), order_.end());
    std::rotate(order_.begin(), smallest, order_.end());
    if (order_.size() >= 3 && order_[1] > order_.back())
        std::reverse(order_.begin() + 1, order_.end());
}

std::vector<int> CyclicOrder::positions() const
{
    Vertex top = order_.empty() ? -1 : *std::max_element(order_.begin(), order_.end());
    std::vector<int> pos(static_cast<std::size_t>(top + 1), -1);
    for (std::size_t i = 0; i < order_.size(); ++i)
        pos[order_[i]] = static_cast<int>(i);
    return pos;
}

bool cyclically_between(const std::vector<int> &position, Vertex a, Vertex b, Vertex c)
{
    int pa = position[a], pb = position[b], pc = position[c];
    if (pa < pc)
        return pa < pb && pb < pc;
    return pb > pa || pb < pc;
}

int count_pages(const std::map<Edge, int> &pages)
{
    std::set<int> used;
    for (const auto &[e, p] : pages)
        used.insert(p);
    return static_cast<int>(used.size());
}

bool chords_cross(const std::vector<int> &position, const Edge &a, const Edge &b)
{
    if (a.has(b.u) || a.has(b.v))
        return false;
    int lo = std::min(position[a.u], position[a.v]);
    int hi = std::max(position[a.u], position[a.v]);
    auto inside = [&](Vertex x) { return position[x] > lo && position[x] < hi; };
    return inside(b.u) != inside(b.v);
}

Graph conflict_graph(const Graph &g, const CyclicOrder &order)
{
    const auto pos = order.positions();
    const auto &edges = g.edges();
    std::vector<Edge> conflicts;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (chords_cross(pos, edges[i], edges[j]))
                conflicts.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(static_cast<int>(edges.size()), conflicts);
}

namespace {

// Greedy clique; any clique is a valid lower bound.
int greedy_clique(const Graph &g)
{
    int best = g.vertex_count() > 0 ? 1 : 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        std::vector<Vertex> clique{s};
        std::vector<Vertex> cand = g.neighbors(s);
        std::sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        for (Vertex c : cand)
            if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return g.has_edge(x, c); }))
                clique.push_back(c);
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

struct Colorer {
    const Graph &g;
    int k;
    std::vector<Vertex> sequence;
    std::vector<int> color;

    bool run(std::size_t i, int used)
    {
        if (i == sequence.size())
            return true;
        Vertex v = sequence[i];
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (Vertex w : g.neighbors(v))
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            color[v] = c;
            if (run(i + 1, std::max(used, c + 1)))
                return true;
            color[v] = -1;
        }
        return false;
    }
};

// Bitmask variant used in the oracle's inner loop (at most 64 chords).
struct MaskColorer {
    std::vector<std::uint64_t> adj;
    std::vector<int> sequence;
    std::vector<std::uint64_t> classes;
    int k = 0;

    bool run(std::size_t i, int used)
    {
        if (i == sequence.size())
            return true;
        int v = sequence[i];
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (classes[c] & adj[v])
                continue;
            classes[c] |= std::uint64_t{1} << v;
            if (run(i + 1, std::max(used, c + 1)))
                return true;
            classes[c] &= ~(std::uint64_t{1} << v);
        }
        return false;
    }

    bool colorable(int colors)
    {
        k = colors;
        classes.assign(static_cast<std::size_t>(colors), 0);
        return run(0, 0);
    }
};

int mask_clique_bound(const std::vector<std::uint64_t> &adj)
{
    int best = adj.empty() ? 0 : 1;
    for (std::size_t s = 0; s < adj.size(); ++s) {
        std::uint64_t cand = adj[s];
        int size = 1;
        while (cand) {
            int c = std::countr_zero(cand);
            ++size;
            cand &= adj[static_cast<std::size_t>(c)];
        }
        best = std::max(best, size);
    }
    return best;
}

} // namespace

std::optional<std::vector<int>> color_with(const Graph &g, int k)
{
    if (g.vertex_count() == 0)
        return std::vector<int>{};
    if (k <= 0)
        return std::nullopt;
    Colorer colorer{g, k, {}, std::vector<int>(static_cast<std::size_t>(g.vertex_count()), -1)};
    colorer.sequence.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        colorer.sequence[v] = v;
    std::stable_sort(colorer.sequence.begin(), colorer.sequence.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    if (!colorer.run(0, 0))
        return std::nullopt;
    return colorer.color;
}

int chromatic_number(const Graph &g)
{
    if (g.vertex_count() == 0)
        return 0;
    for (int k = greedy_clique(g);; ++k)
        if (color_with(g, k))
            return k;
}

namespace {

std::optional<std::vector<int>> two_color(const Graph &g)
{
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (color[s] >= 0)
            continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            for (Vertex y : g.neighbors(x)) {
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

} // namespace

std::optional<BookLayout> assign_pages(const Graph &g, const CyclicOrder &order, int pages)
{
    if (pages < 1)
        throw Error(ErrorKind::PreconditionViolated, "page budget must be at least 1");
    const Graph conflicts = conflict_graph(g, order);
    std::optional<std::vector<int>> color;
    if (pages == 1) {
        if (conflicts.edge_count() > 0)
            return std::nullopt;
        color = std::vector<int>(g.edge_count(), 0);
    } else if (pages == 2) {
        color = two_color(conflicts);
    } else {
        color = color_with(conflicts, pages);
    }
    if (!color)
        return std::nullopt;

    // Renumber colors by first appearance so page 1 is always the first used.
    std::vector<int> remap(static_cast<std::size_t>(std::max(pages, 1)), 0);
    int next = 0;
    BookLayout layout;
    layout.spine = order;
    const auto &edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int c = (*color)[i];
        if (remap[c] == 0)
            remap[c] = ++next;
        layout.pages[edges[i]] = remap[c];
    }
    layout.page_count = next;
    return layout;
}

std::vector<Violation> verify_layout(const Graph &g, const BookLayout &layout)
{
    const auto &spine = layout.spine.order();
    if (static_cast<int>(spine.size()) != g.vertex_count())
        throw Error(ErrorKind::CoverageError, "spine has " + std::to_string(spine.size()) + " vertices, graph has " +
                                                  std::to_string(g.vertex_count()));
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < spine.size(); ++i) {
        Vertex v = spine[i];
        if (!g.contains(v) || pos[v] >= 0)
            throw Error(ErrorKind::CoverageError, "spine vertex " + std::to_string(v) + " is not a distinct graph vertex");
        pos[v] = static_cast<int>(i);
    }
    if (layout.pages.size() != g.edge_count())
        throw Error(ErrorKind::CoverageError, "page map has " + std::to_string(layout.pages.size()) + " edges, graph has " +
                                                  std::to_string(g.edge_count()));
    std::vector<int> page(g.edge_count(), 0);
    const auto &edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto it = layout.pages.find(edges[i]);
        if (it == layout.pages.end())
            throw Error(ErrorKind::CoverageError, "edge " + to_string(edges[i]) + " has no page");
        if (it->second < 1)
            throw Error(ErrorKind::CoverageError, "edge " + to_string(edges[i]) + " has page " + std::to_string(it->second));
        page[i] = it->second;
    }

    std::vector<Violation> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (page[i] == page[j] && chords_cross(pos, edges[i], edges[j]))
                out.push_back({edges[i], edges[j], page[i]});
    return out;
}

namespace {

class OracleSearch {
public:
    explicit OracleSearch(const Graph &g) : g_(g), best_(static_cast<int>(g.edge_count()) + 1) {}

    void run_chunk(Vertex second)
    {
        const int n = g_.vertex_count();
        std::vector<Vertex> rest;
        for (Vertex v = 1; v < n; ++v)
            if (v != second)
                rest.push_back(v);
        std::vector<Vertex> order(static_cast<std::size_t>(n));
        std::vector<int> pos(static_cast<std::size_t>(n));
        MaskColorer colorer;
        do {
            if (best_.load() <= 1)
                return;
            if (!rest.empty() && rest.back() < second)
                continue;
            order[0] = 0;
            order[1] = second;
            std::copy(rest.begin(), rest.end(), order.begin() + 2);
            for (int i = 0; i < n; ++i)
                pos[order[i]] = i;
            evaluate(pos, colorer);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    void evaluate(const std::vector<int> &pos, MaskColorer &colorer)
    {
        const auto &edges = g_.edges();
        const std::size_t m = edges.size();
        colorer.adj.assign(m, 0);
        bool any = false;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (chords_cross(pos, edges[i], edges[j])) {
                    colorer.adj[i] |= std::uint64_t{1} << j;
                    colorer.adj[j] |= std::uint64_t{1} << i;
                    any = true;
                }
        if (!any) {
            lower_to(1);
            return;
        }
        int cap = best_.load();
        int lb = std::max(2, mask_clique_bound(colorer.adj));
        if (lb >= cap)
            return;
        colorer.sequence.resize(m);
        for (std::size_t i = 0; i < m; ++i)
            colorer.sequence[i] = static_cast<int>(i);
        std::stable_sort(colorer.sequence.begin(), colorer.sequence.end(), [&](int a, int b) {
            return std::popcount(colorer.adj[static_cast<std::size_t>(a)]) >
                   std::popcount(colorer.adj[static_cast<std::size_t>(b)]);
        });
        for (int k = lb; k < cap; ++k)
            if (colorer.colorable(k)) {
                lower_to(k);
                return;
            }
    }

    int best() const { return best_.load(); }

private:
    void lower_to(int k)
    {
        int cur = best_.load();
        while (k < cur && !best_.compare_exchange_weak(cur, k)) {
        }
    }

    const Graph &g_;
    std::atomic<int> best_;
};

} // namespace

int pagenumber_oracle(const Graph &g, const OracleOptions &options)
{
    const int n = g.vertex_count();
    if (n > options.max_vertices)
        throw Error(ErrorKind::TooLarge,
                    std::to_string(n) + " vertices exceeds the oracle limit of " + std::to_string(options.max_vertices));
    if (g.edge_count() == 0)
        return 0;
    if (n <= 3)
        return 1;
    if (g.edge_count() > 64) {
        // Generic path for oversized limits: same enumeration, Graph-based coloring.
        int best = static_cast<int>(g.edge_count());
        std::vector<Vertex> rest;
        for (Vertex v = 1; v < n; ++v)
            rest.push_back(v);
        do {
            if (rest.front() > rest.back())
                continue;
            std::vector<Vertex> order{0};
            order.insert(order.end(), rest.begin(), rest.end());
            const Graph conflicts = conflict_graph(g, CyclicOrder(order));
            for (int k = 1; k < best; ++k)
                if (color_with(conflicts, k)) {
                    best = k;
                    break;
                }
        } while (best > 1 && std::next_permutation(rest.begin(), rest.end()));
        return best;
    }

    OracleSearch search(g);
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n - 1)));
    if (workers == 1) {
        for (Vertex second = 1; second < n; ++second)
            search.run_chunk(second);
    } else {
        std::atomic<Vertex> next{1};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (Vertex s = next++; s < n; s = next++)
                    search.run_chunk(s);
            });
        for (auto &th : pool)
            th.join();
    }
    return search.best();
}

} // namespace bookembed
