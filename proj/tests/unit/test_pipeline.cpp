#include <doctest.h>

#include "bookembed/error.hpp"
#include "bookembed/generators.hpp"
#include "bookembed/layout.hpp"
#include "bookembed/pipeline.hpp"
#include "bookembed/random_graphs.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace bookembed;

namespace {

void check_two_page(const Graph &g)
{
    EmbedResult r = two_page_embed(g);
    CHECK(r.layout.page_count <= 2);
    CHECK(verify_layout(g, r.layout).empty());
}

} // namespace

TEST_CASE("reference families get two-page layouts")
{
    check_two_page(extended_x_tree(4));
    check_two_page(grid(10, 10));
    check_two_page(fixtures::k4_pendant());
    CHECK(oracle::naive_pagenumber(fixtures::k4_pendant()) == 2);
    check_two_page(fixtures::bowtie());
    check_two_page(fixtures::bonnet());
    check_two_page(Graph(0));
    check_two_page(Graph(3));
    check_two_page(fixtures::star(5));
}

TEST_CASE("small pipeline results match the exact book thickness")
{
    EmbedResult c = two_page_embed(fixtures::cycle(5));
    CHECK(c.layout.page_count == 1);
    EmbedResult k = two_page_embed(fixtures::complete(4));
    CHECK(k.layout.page_count == 2);
    CHECK(k.stats.blocks == 1);
}

TEST_CASE("pipeline refuses what it cannot guarantee")
{
    try {
        two_page_embed(fixtures::complete(5));
        FAIL("expected NotPlanar");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotPlanar);
    }
    try {
        two_page_embed(fixtures::octahedron_with_inner_vertex());
        FAIL("expected NotNicelyPlanar");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotNicelyPlanar);
        std::string what = e.what();
        CHECK(what.find("{0,2,4}") != std::string::npos);
        CHECK(what.find("homeomorphic") != std::string::npos);
    }
}

TEST_CASE("homeomorphic layouts")
{
    HomeomorphicLayout c3 = homeomorphic_two_page(fixtures::complete(3));
    CHECK(c3.subdivided.vertex_count() == 6);
    CHECK(c3.layout.page_count == 1);
    CHECK(c3.spine_crossings == 0);

    HomeomorphicLayout k4 = homeomorphic_two_page(fixtures::complete(4));
    CHECK(k4.subdivided.vertex_count() == 10);
    CHECK(verify_layout(k4.subdivided, k4.layout).empty());
    CHECK(k4.layout.page_count <= 2);
    CHECK(k4.spine_crossings == count_spine_crossings(k4.subdivided, k4.subdivision, k4.layout));

    HomeomorphicLayout inner = homeomorphic_two_page(fixtures::octahedron_with_inner_vertex());
    CHECK(verify_layout(inner.subdivided, inner.layout).empty());

    CHECK_THROWS_AS(homeomorphic_two_page(fixtures::complete(5)), Error);
}

TEST_CASE("pipeline is deterministic and handles glued blocks")
{
    random_graphs::Rng rng(30);
    for (int round = 0; round < 10; ++round) {
        std::vector<Graph> blocks;
        for (int b = 0; b < 3; ++b)
            blocks.push_back(random_graphs::nicely_planar_block(3 + static_cast<int>(rng() % 8), rng));
        Graph g = random_graphs::glue_at_cutpoints(blocks, rng);
        EmbedResult a = two_page_embed(g), b = two_page_embed(g);
        CHECK(a.layout == b.layout);
        CHECK(verify_layout(g, a.layout).empty());
        CHECK(a.layout.page_count <= 2);
    }
}
