#include <doctest.h>

#include "bookembed/connectivity.hpp"
#include "bookembed/error.hpp"
#include "bookembed/generators.hpp"
#include "bookembed/layout.hpp"
#include "bookembed/random_graphs.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace bookembed;

TEST_CASE("bowtie has two blocks and one cutpoint")
{
    BlockCutTree t = blocks_and_cutpoints(fixtures::bowtie());
    CHECK(t.blocks == std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}});
    CHECK(t.cutpoints == std::vector<Vertex>{2});
    CHECK(t.incidence.size() == 2);
}

TEST_CASE("a cycle is a single block")
{
    BlockCutTree t = blocks_and_cutpoints(fixtures::cycle(5));
    CHECK(t.blocks.size() == 1);
    CHECK(t.cutpoints.empty());
}

TEST_CASE("bonnet graph blocks")
{
    BlockCutTree t = blocks_and_cutpoints(fixtures::bonnet());
    CHECK(t.blocks == std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 3}, {0, 4}, {0, 5}, {6, 7, 8}});
    CHECK(t.cutpoints == std::vector<Vertex>{0});
}

TEST_CASE("empty graph has an empty forest; isolated vertices are blocks")
{
    CHECK(blocks_and_cutpoints(Graph(0)).blocks.empty());
    BlockCutTree t = blocks_and_cutpoints(Graph(2));
    CHECK(t.blocks == std::vector<std::vector<Vertex>>{{0}, {1}});
}

TEST_CASE("block edge sets partition the edges")
{
    random_graphs::Rng rng(5);
    for (int round = 0; round < 60; ++round) {
        Graph g = random_graphs::planar_subgraph(4 + static_cast<int>(rng() % 20), 0.5, rng);
        BlockCutTree t = blocks_and_cutpoints(g);
        std::vector<Edge> all;
        for (const auto &be : t.block_edges)
            all.insert(all.end(), be.begin(), be.end());
        std::sort(all.begin(), all.end());
        CHECK(all == g.edges());
        // Cutpoints are exactly the vertices in two or more blocks.
        std::map<Vertex, int> membership;
        for (const auto &b : t.blocks)
            for (Vertex v : b)
                ++membership[v];
        std::vector<Vertex> multi;
        for (auto [v, c] : membership)
            if (c >= 2)
                multi.push_back(v);
        CHECK(multi == t.cutpoints);
        // Against brute force: cutpoints raise the component count.
        std::vector<Vertex> brute;
        int base = oracle::components_without(g, {});
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (oracle::components_without(g, {v}) > base)
                brute.push_back(v);
        CHECK(brute == t.cutpoints);
    }
}

TEST_CASE("is_k_connected")
{
    CHECK(is_k_connected(fixtures::complete(4), 3));
    CHECK_FALSE(is_k_connected(fixtures::cycle(4), 3));
    CHECK(is_k_connected(fixtures::cycle(4), 2));
    // Wheel with a 4-cycle rim: every 2-subset checked by the subset oracle.
    CHECK(oracle::k_connected(fixtures::wheel(4), 3));
    CHECK(is_k_connected(fixtures::wheel(4), 3));
    CHECK_THROWS_AS(is_k_connected(fixtures::complete(3), 3), Error);
    try {
        is_k_connected(fixtures::complete(3), 3);
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::TooSmall);
    }
}

TEST_CASE("separating pairs")
{
    CHECK(separating_pairs(fixtures::complete(4)).empty());
    CHECK(separating_pairs(fixtures::cycle(4)) == std::vector<Edge>{{0, 2}, {1, 3}});
    // 2x3 grid: 0 1 2 / 3 4 5. The middle rung {1,4}, and the two neighbors
    // of each degree-2 corner.
    auto brute = oracle::separating_pairs(grid(2, 3));
    CHECK(brute == std::vector<std::pair<Vertex, Vertex>>{{0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}});
    CHECK(separating_pairs(grid(2, 3)) == std::vector<Edge>{{0, 4}, {1, 3}, {1, 4}, {1, 5}, {2, 4}});
    try {
        separating_pairs(fixtures::bowtie());
        FAIL("expected NotTwoConnected");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotTwoConnected);
    }
}

TEST_CASE("separating pairs agree with exhaustive deletion")
{
    random_graphs::Rng rng(9);
    int checked = 0;
    while (checked < 40) {
        Graph g = random_graphs::planar_subgraph(4 + static_cast<int>(rng() % 12), 0.75, rng);
        if (!oracle::k_connected(g, 2) || g.vertex_count() < 3)
            continue;
        ++checked;
        std::vector<Edge> brute;
        for (auto [a, b] : oracle::separating_pairs(g))
            brute.emplace_back(a, b);
        CHECK(separating_pairs(g) == brute);
    }
}

namespace {

BookLayout one_page(std::vector<Vertex> order, const std::vector<Edge> &edges)
{
    BookLayout l;
    l.spine = CyclicOrder(std::move(order));
    for (const Edge &e : edges)
        l.pages[e] = 1;
    l.page_count = edges.empty() ? 0 : 1;
    return l;
}

} // namespace

TEST_CASE("merge bowtie triangles on one page")
{
    Graph g = fixtures::bowtie();
    BlockCutTree t = blocks_and_cutpoints(g);
    std::map<std::size_t, BookLayout> per;
    per[0] = one_page({0, 1, 2}, t.block_edges[0]);
    per[1] = one_page({2, 3, 4}, t.block_edges[1]);
    BookLayout merged = merge_layouts(t, per);
    CHECK(merged.page_count == 1);
    CHECK(merged.spine.size() == 5);
    CHECK(verify_layout(g, merged).empty());
}

TEST_CASE("merge two K4 blocks sharing a cutpoint keeps two pages")
{
    Graph g = fixtures::make(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                 {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
    BlockCutTree t = blocks_and_cutpoints(g);
    REQUIRE(t.blocks.size() == 2);
    std::map<std::size_t, BookLayout> per;
    for (std::size_t b = 0; b < 2; ++b) {
        const auto &v = t.blocks[b];
        auto l = assign_pages(induced_subgraph(g, v).graph, CyclicOrder({0, 1, 2, 3}), 2);
        REQUIRE(l);
        BookLayout global;
        std::vector<Vertex> order;
        for (Vertex x : l->spine.order())
            order.push_back(v[x]);
        global.spine = CyclicOrder(order);
        for (auto [e, p] : l->pages)
            global.pages[Edge(v[e.u], v[e.v])] = p;
        global.page_count = l->page_count;
        per[b] = global;
    }
    BookLayout merged = merge_layouts(t, per);
    CHECK(merged.page_count == 2);
    CHECK(verify_layout(g, merged).empty());
}

TEST_CASE("merge a path block with a K4 block")
{
    Graph g = fixtures::make(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    CHECK(oracle::naive_pagenumber(g) == 2);
    BlockCutTree t = blocks_and_cutpoints(g);
    std::map<std::size_t, BookLayout> per;
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        const auto &v = t.blocks[b];
        if (v.size() == 2) {
            per[b] = one_page(v, t.block_edges[b]);
            continue;
        }
        auto l = assign_pages(induced_subgraph(g, v).graph, CyclicOrder({0, 1, 2, 3}), 2);
        REQUIRE(l);
        BookLayout global;
        std::vector<Vertex> order;
        for (Vertex x : l->spine.order())
            order.push_back(v[x]);
        global.spine = CyclicOrder(order);
        for (auto [e, p] : l->pages)
            global.pages[Edge(v[e.u], v[e.v])] = p;
        global.page_count = 2;
        per[b] = global;
    }
    BookLayout merged = merge_layouts(t, per);
    CHECK(merged.page_count == 2);
    CHECK(verify_layout(g, merged).empty());
}

TEST_CASE("merge rejects an invalid block layout and names it")
{
    Graph g = fixtures::make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    BlockCutTree t = blocks_and_cutpoints(g);
    std::map<std::size_t, BookLayout> per;
    per[0] = one_page({0, 1, 2, 3}, t.block_edges[0]);  // diagonals cross on page 1
    per[1] = one_page({3, 4}, t.block_edges[1]);
    try {
        merge_layouts(t, per);
        FAIL("expected InvalidBlockLayout");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::InvalidBlockLayout);
        CHECK(std::string(e.what()).find("block 0") != std::string::npos);
    }
}

TEST_CASE("merge concatenates components")
{
    Graph g = fixtures::bonnet();
    BlockCutTree t = blocks_and_cutpoints(g);
    std::map<std::size_t, BookLayout> per;
    for (std::size_t b = 0; b < t.blocks.size(); ++b)
        per[b] = one_page(t.blocks[b], t.block_edges[b]);
    BookLayout merged = merge_layouts(t, per);
    CHECK(merged.spine.size() == 9);
    CHECK(merged.page_count == 1);
    CHECK(verify_layout(g, merged).empty());
}
