#include "bookembed/hamiltonian.hpp"

#include <algorithm>
#include <random>

#include "bookembed/error.hpp"
#include "bookembed/layout.hpp"

namespace bookembed {

namespace {

class CycleSearch {
public:
    CycleSearch(const Graph &g, std::uint64_t budget)
        : g_(g), n_(g.vertex_count()), budget_(budget), visited_(static_cast<std::size_t>(n_), false),
          open_degree_(static_cast<std::size_t>(n_), 0), mark_(static_cast<std::size_t>(n_), 0)
    {
        for (Vertex v = 0; v < n_; ++v)
            open_degree_[v] = g.degree(v);
    }

    std::optional<std::vector<Vertex>> run()
    {
        Vertex start = 0;
        for (Vertex v = 1; v < n_; ++v)
            if (g_.degree(v) > g_.degree(start))
                start = v;
        visit(start);
        left_.push_back(start);
        right_.push_back(start);
        if (!extend())
            return std::nullopt;
        std::vector<Vertex> order(left_.rbegin(), left_.rend());
        order.insert(order.end(), right_.begin() + 1, right_.end());
        return order;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void visit(Vertex v)
    {
        visited_[v] = true;
        ++count_;
        for (Vertex w : g_.neighbors(v))
            --open_degree_[w];
    }

    void unvisit(Vertex v)
    {
        visited_[v] = false;
        --count_;
        for (Vertex w : g_.neighbors(v))
            ++open_degree_[w];
    }

    // Every open vertex must still be able to get two cycle neighbors, and
    // the open vertices must induce a connected graph.
    bool feasible(Vertex a, Vertex b)
    {
        const int remaining = n_ - count_;
        if (remaining == 0)
            return true;
        Vertex seed = -1;
        for (Vertex x = 0; x < n_; ++x) {
            if (visited_[x])
                continue;
            seed = x;
            int ends = 0;
            bool to_a = g_.has_edge(x, a);
            bool to_b = a != b && g_.has_edge(x, b);
            ends = (to_a ? 1 : 0) + (to_b ? 1 : 0);
            int avail = open_degree_[x] + ends;
            if (avail < 2)
                return false;
            if (remaining == 1 && !(to_a && to_b))
                return false;
            if (remaining > 1 && open_degree_[x] == 0)
                return false;
        }
        // Connectivity of the open vertices.
        ++stamp_;
        stack_.clear();
        stack_.push_back(seed);
        mark_[seed] = stamp_;
        int seen = 1;
        while (!stack_.empty()) {
            Vertex x = stack_.back();
            stack_.pop_back();
            for (Vertex y : g_.neighbors(x))
                if (!visited_[y] && mark_[y] != stamp_) {
                    mark_[y] = stamp_;
                    ++seen;
                    stack_.push_back(y);
                }
        }
        return seen == remaining;
    }

    std::vector<Vertex> candidates(Vertex end) const
    {
        std::vector<Vertex> out;
        for (Vertex w : g_.neighbors(end))
            if (!visited_[w])
                out.push_back(w);
        std::stable_sort(out.begin(), out.end(),
                         [&](Vertex x, Vertex y) { return open_degree_[x] < open_degree_[y]; });
        return out;
    }

    bool extend()
    {
        if (++nodes_ > budget_)
            throw Error(ErrorKind::BudgetExceeded,
                        "Hamiltonian search exceeded " + std::to_string(budget_) + " nodes");
        Vertex a = left_.back(), b = right_.back();
        if (count_ == n_)
            return n_ >= 3 && g_.has_edge(a, b);
        if (!feasible(a, b))
            return false;

        std::vector<Vertex> from_a = a == b ? std::vector<Vertex>{} : candidates(a);
        std::vector<Vertex> from_b = candidates(b);
        bool use_left = !from_a.empty() && (from_b.empty() || from_a.size() < from_b.size());
        std::vector<Vertex> &side = use_left ? left_ : right_;
        for (Vertex w : use_left ? from_a : from_b) {
            visit(w);
            side.push_back(w);
            if (extend())
                return true;
            side.pop_back();
            unvisit(w);
        }
        return false;
    }

    const Graph &g_;
    int n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int count_ = 0;
    std::vector<bool> visited_;
    std::vector<int> open_degree_;
    std::vector<Vertex> left_, right_;
    std::vector<unsigned> mark_;
    unsigned stamp_ = 0;
    std::vector<Vertex> stack_;
};

// Posa rotation-extension with restarts from a fixed seed. Finds cycles in
// triangulations quickly but cannot prove that none exists.
std::optional<std::vector<Vertex>> rotate_extend(const Graph &g, std::uint64_t budget, std::uint64_t &steps)
{
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) < 2)
            return std::nullopt;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> path, pick;
    const std::uint64_t per_restart = 20ULL * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    auto reindex = [&](std::size_t from) {
        for (std::size_t i = from; i < path.size(); ++i)
            pos[path[i]] = static_cast<int>(i);
    };
    while (steps < budget) {
        std::fill(pos.begin(), pos.end(), -1);
        path.assign(1, static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)));
        pos[path[0]] = 0;
        for (std::uint64_t local = 0; local < per_restart && steps < budget; ++local, ++steps) {
            const Vertex end = path.back();
            pick.clear();
            for (Vertex w : g.neighbors(end))
                if (pos[w] < 0)
                    pick.push_back(w);
            if (!pick.empty()) {
                Vertex w = pick[rng() % pick.size()];
                pos[w] = static_cast<int>(path.size());
                path.push_back(w);
                continue;
            }
            if (static_cast<int>(path.size()) == n && g.has_edge(end, path[0]))
                return path;
            for (Vertex w : g.neighbors(end))
                if (pos[w] + 2 < static_cast<int>(path.size()))
                    pick.push_back(w);
            if (pick.empty()) {
                std::reverse(path.begin(), path.end());
                reindex(0);
                continue;
            }
            Vertex w = pick[rng() % pick.size()];
            std::reverse(path.begin() + pos[w] + 1, path.end());
            reindex(static_cast<std::size_t>(pos[w]) + 1);
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<HamiltonianCycle> hamiltonian_cycle(const Graph &g, const HamiltonianOptions &options,
                                                  HamiltonianStats *stats)
{
    if (g.vertex_count() < 3)
        return std::nullopt;
    const std::uint64_t n = static_cast<std::uint64_t>(g.vertex_count());
    std::uint64_t steps = 0;
    auto quick = rotate_extend(g, std::min(options.node_budget / 2, 100 * n * n + 1000), steps);
    if (quick) {
        if (stats)
            stats->nodes = steps;
        return HamiltonianCycle{std::move(*quick)};
    }

    CycleSearch search(g, options.node_budget - steps);
    std::optional<std::vector<Vertex>> order;
    try {
        order = search.run();
    } catch (...) {
        if (stats)
            stats->nodes = steps + search.nodes();
        throw;
    }
    if (stats)
        stats->nodes = steps + search.nodes();
    if (!order)
        return std::nullopt;
    return HamiltonianCycle{std::move(*order)};
}

bool is_hamiltonian_cycle(const Graph &g, const std::vector<Vertex> &order)
{
    const int n = g.vertex_count();
    if (n < 3 || static_cast<int>(order.size()) != n)
        return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Vertex v : order) {
        if (!g.contains(v) || seen[v])
            return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i < order.size(); ++i)
        if (!g.has_edge(order[i], order[(i + 1) % order.size()]))
            return false;
    return true;
}

CyclicOrder spine_order(const HamiltonianCycle &cycle, const AugmentationTrace &trace)
{
    const int n0 = trace.original_vertex_count;
    const int total = n0 + static_cast<int>(trace.added_vertices.size());
    for (std::size_t i = 0; i < trace.added_vertices.size(); ++i)
        if (trace.added_vertices[i].id != n0 + static_cast<int>(i))
            throw Error(ErrorKind::TraceMismatch, "added vertex ids are not dense");
    if (static_cast<int>(cycle.order.size()) != total)
        throw Error(ErrorKind::TraceMismatch, "cycle has " + std::to_string(cycle.order.size()) +
                                                  " vertices, trace describes " + std::to_string(total));
    std::vector<bool> seen(static_cast<std::size_t>(total), false);
    std::vector<Vertex> kept;
    for (Vertex v : cycle.order) {
        if (v < 0 || v >= total || seen[v])
            throw Error(ErrorKind::TraceMismatch, "cycle vertex " + std::to_string(v) + " is unexpected or repeated");
        seen[v] = true;
        if (v < n0)
            kept.push_back(v);
    }
    return CyclicOrder(std::move(kept));
}

Graph subhamiltonian_completion(const Graph &g, const CyclicOrder &order)
{
    const auto &seq = order.order();
    std::vector<Vertex> sorted(seq);
    std::sort(sorted.begin(), sorted.end());
    bool covers = static_cast<int>(sorted.size()) == g.vertex_count();
    for (std::size_t i = 0; covers && i < sorted.size(); ++i)
        covers = sorted[i] == static_cast<Vertex>(i);
    if (!covers)
        throw Error(ErrorKind::NotSubhamiltonianOrder, "order does not list exactly the graph's vertices");
    if (!assign_pages(g, order, 2))
        throw Error(ErrorKind::NotSubhamiltonianOrder, "graph has no two-page layout under this order");

    std::vector<Edge> extra;
    if (seq.size() >= 2)
        for (std::size_t i = 0; i < seq.size(); ++i) {
            Edge e(seq[i], seq[(i + 1) % seq.size()]);
            if (!g.has_edge(e.u, e.v) && std::find(extra.begin(), extra.end(), e) == extra.end())
                extra.push_back(e);
        }
    return extend_graph(g, g.vertex_count(), extra);
}

} // namespace bookembed
