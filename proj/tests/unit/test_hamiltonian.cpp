#include <doctest.h>

#include <random>

#include "bookembed/augment.hpp"
#include "bookembed/error.hpp"
#include "bookembed/generators.hpp"
#include "bookembed/hamiltonian.hpp"
#include "bookembed/layout.hpp"
#include "bookembed/pipeline.hpp"
#include "bookembed/planar.hpp"
#include "bookembed/random_graphs.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace bookembed;

TEST_CASE("K4 has a Hamiltonian cycle")
{
    auto c = hamiltonian_cycle(fixtures::complete(4));
    REQUIRE(c);
    CHECK(is_hamiltonian_cycle(fixtures::complete(4), c->order));
}

TEST_CASE("a star has none")
{
    CHECK_FALSE(hamiltonian_cycle(fixtures::star(3)));
    CHECK_FALSE(hamiltonian_cycle(fixtures::path(2)));
}

TEST_CASE("the octahedron has one")
{
    Graph oct = fixtures::octahedron();
    auto c = hamiltonian_cycle(oct);
    REQUIRE(c);
    CHECK(is_hamiltonian_cycle(oct, c->order));
}

TEST_CASE("search agrees with permutation brute force")
{
    random_graphs::Rng rng(4);
    for (int round = 0; round < 80; ++round) {
        Graph g = random_graphs::planar_subgraph(3 + static_cast<int>(rng() % 6), 0.8, rng);
        auto c = hamiltonian_cycle(g);
        CHECK(c.has_value() == oracle::has_hamiltonian_cycle(g));
        if (c)
            CHECK(is_hamiltonian_cycle(g, c->order));
    }
}

TEST_CASE("budget overrun is reported")
{
    HamiltonianOptions tiny;
    tiny.node_budget = 3;
    try {
        hamiltonian_cycle(grid(5, 5), tiny);
        FAIL("expected BudgetExceeded");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("spine order drops added vertices")
{
    AugmentationTrace t;
    t.original_vertex_count = 4;
    t.added_vertices.push_back(AddedVertex{4, AddedKind::Stellation, {0, 1, 2, 3}});
    CHECK(spine_order(HamiltonianCycle{{0, 1, 4, 2, 3}}, t).order() == std::vector<Vertex>{0, 1, 2, 3});
    AugmentationTrace empty;
    empty.original_vertex_count = 4;
    CHECK(spine_order(HamiltonianCycle{{2, 1, 0, 3}}, empty).order() == std::vector<Vertex>{0, 1, 2, 3});
    CHECK_THROWS_AS(spine_order(HamiltonianCycle{{0, 1, 2, 3}}, t), Error);
}

TEST_CASE("octahedron cycle restricted to C4 is a two-page order")
{
    Graph c4 = fixtures::cycle(4);
    Augmented s = stellate(c4, *planar_embed(c4));
    auto c = hamiltonian_cycle(s.graph);
    REQUIRE(c);
    CyclicOrder o = spine_order(*c, s.trace);
    auto l = assign_pages(c4, o, 2);
    REQUIRE(l);
    CHECK(verify_layout(c4, *l).empty());
}

TEST_CASE("spine order keeps relative cyclic order")
{
    std::mt19937_64 rng(8);
    for (int round = 0; round < 100; ++round) {
        int n0 = 3 + static_cast<int>(rng() % 6), extra = static_cast<int>(rng() % 5);
        std::vector<Vertex> cyc(static_cast<std::size_t>(n0 + extra));
        std::iota(cyc.begin(), cyc.end(), 0);
        std::shuffle(cyc.begin(), cyc.end(), rng);
        AugmentationTrace t;
        t.original_vertex_count = n0;
        for (int i = 0; i < extra; ++i)
            t.added_vertices.push_back(AddedVertex{n0 + i, AddedKind::Stellation, {}});
        CyclicOrder o = spine_order(HamiltonianCycle{cyc}, t);
        std::vector<int> before(cyc.size());
        for (std::size_t i = 0; i < cyc.size(); ++i)
            before[cyc[i]] = static_cast<int>(i);
        // Canonical form may read the cycle backwards, which flips every
        // betweenness answer at once.
        auto after = o.positions();
        int same = 0, flipped = 0;
        for (Vertex a = 0; a < n0; ++a)
            for (Vertex b = 0; b < n0; ++b)
                for (Vertex c = 0; c < n0; ++c)
                    if (a != b && b != c && a != c)
                        ++(cyclically_between(before, a, b, c) == cyclically_between(after, a, b, c) ? same : flipped);
        CHECK((same == 0 || flipped == 0));
    }
}

TEST_CASE("subhamiltonian completion")
{
    Graph p = fixtures::path(4);
    CHECK(subhamiltonian_completion(p, CyclicOrder({0, 1, 2, 3})) == fixtures::cycle(4));
    Graph c4 = fixtures::cycle(4);
    CHECK(subhamiltonian_completion(c4, CyclicOrder({0, 1, 2, 3})) == c4);
    try {
        subhamiltonian_completion(fixtures::complete(5), CyclicOrder({0, 1, 2, 3, 4}));
        FAIL("expected NotSubhamiltonianOrder");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotSubhamiltonianOrder);
    }
}

TEST_CASE("completing the 3x3 grid along the pipeline order")
{
    Graph g = grid(3, 3);
    EmbedResult r = two_page_embed(g);
    Graph h = subhamiltonian_completion(g, r.layout.spine);
    CHECK(planar_embed(h).has_value());
    CHECK(is_hamiltonian_cycle(h, r.layout.spine.order()));
}
