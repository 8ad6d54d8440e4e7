#include <doctest.h>

#include "bookembed/augment.hpp"
#include "bookembed/connectivity.hpp"
#include "bookembed/error.hpp"
#include "bookembed/generators.hpp"
#include "bookembed/planar.hpp"
#include "bookembed/random_graphs.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace bookembed;

namespace {

std::vector<std::vector<Vertex>> as_lists(const std::vector<Triangle> &ts)
{
    std::vector<std::vector<Vertex>> out;
    for (const Triangle &t : ts)
        out.push_back({t[0], t[1], t[2]});
    return out;
}

void check_three_connected_supergraph(const Graph &g, const Augmented &a)
{
    CHECK(oracle::k_connected(a.graph, 3));
    CHECK(oracle::separating_triangles(a.graph).empty());
    validate_embedding(a.graph, a.rotation);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        for (Vertex y = x + 1; y < g.vertex_count(); ++y)
            CHECK(a.graph.has_edge(x, y) == g.has_edge(x, y));
    for (std::size_t i = 1; i < a.separating_pair_history.size(); ++i)
        CHECK(a.separating_pair_history[i] < a.separating_pair_history[i - 1]);
    // No added vertex belongs to a separating pair.
    for (auto [x, y] : oracle::separating_pairs(a.graph))
        CHECK((x < g.vertex_count() && y < g.vertex_count()));
}

} // namespace

TEST_CASE("triangle enumeration")
{
    CHECK(enumerate_triangles(fixtures::complete(4)).size() == 4);
    CHECK(enumerate_triangles(fixtures::cycle(6)).empty());
    Graph oct = fixtures::octahedron();
    CHECK(oct.edge_count() == 12);
    CHECK(as_lists(enumerate_triangles(oct)) == oracle::triangles(oct));
    CHECK(enumerate_triangles(oct).size() == 8);
}

TEST_CASE("separating triangles")
{
    CHECK(as_lists(separating_triangles(fixtures::bonnet())) == std::vector<std::vector<Vertex>>{{0, 1, 2}});
    CHECK(oracle::components_without(fixtures::bonnet(), {}) == 2);
    CHECK(oracle::components_without(fixtures::bonnet(), {0, 1, 2}) == 4);
    CHECK(separating_triangles(fixtures::complete(4)).empty());
    Graph inner = fixtures::octahedron_with_inner_vertex();
    CHECK(oracle::separating_triangles(inner) == std::vector<std::vector<Vertex>>{{0, 2, 4}});
    CHECK(as_lists(separating_triangles(inner)) == oracle::separating_triangles(inner));
}

TEST_CASE("nicely planar blocks")
{
    CHECK(is_nicely_planar_block(fixtures::wheel(4)));
    CHECK_FALSE(is_nicely_planar_block(fixtures::octahedron_with_inner_vertex()));
    CHECK(is_nicely_planar_block(grid(4, 4)));
    CHECK(is_nicely_planar_block(fixtures::cycle(7)));
    CHECK(is_nicely_planar_block(Graph(2, std::vector<Edge>{{0, 1}})));
    CHECK_THROWS_AS(is_nicely_planar_block(fixtures::bowtie()), Error);
    try {
        is_nicely_planar_block(fixtures::complete(5));
        FAIL("expected NotPlanar");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotPlanar);
    }
}

TEST_CASE("augmenting K4 changes nothing")
{
    Graph k4 = fixtures::complete(4);
    auto rs = planar_embed(k4);
    Augmented a = augment_to_three_connected(k4, *rs);
    CHECK(a.graph == k4);
    CHECK(a.rotation == *rs);
    CHECK(a.trace.added_vertices.empty());
    CHECK(a.trace.added_edges.empty());
}

TEST_CASE("augmenting C4")
{
    Graph c4 = fixtures::cycle(4);
    Augmented a = augment_to_three_connected(c4, *planar_embed(c4));
    CHECK(a.graph.vertex_count() > 4);
    check_three_connected_supergraph(c4, a);
    CHECK(a.separating_pair_history.front() == 2);
    for (const auto &y : a.trace.added_vertices) {
        CHECK(y.kind == AddedKind::SeparationBridge);
        CHECK(y.attachments.size() == 3);
    }
}

TEST_CASE("augmenting the 2x3 grid")
{
    Graph g = grid(2, 3);
    Augmented a = augment_to_three_connected(g, *planar_embed(g));
    CHECK(a.separating_pair_history.front() == oracle::separating_pairs(g).size());
    check_three_connected_supergraph(g, a);
}

TEST_CASE("augment checks its preconditions")
{
    auto expect = [](const Graph &g) {
        try {
            augment_to_three_connected(g, *planar_embed(g));
            FAIL("expected PreconditionViolated");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::PreconditionViolated);
        }
    };
    expect(fixtures::bowtie());
    expect(fixtures::octahedron_with_inner_vertex());
}

TEST_CASE("stellating C4 gives the octahedron")
{
    Graph c4 = fixtures::cycle(4);
    Augmented s = stellate(c4, *planar_embed(c4));
    CHECK(s.graph.vertex_count() == 6);
    CHECK(s.graph.edge_count() == 12);
    FaceSet fs = faces(s.graph, s.rotation);
    CHECK(fs.faces.size() == 8);
    for (const auto &f : fs.faces)
        CHECK(f.size() == 3);
    CHECK(oracle::face_lengths(s.rotation.rotation) == std::vector<int>(8, 3));
    // Isomorphic to K2,2,2: every vertex has degree 4.
    for (Vertex v = 0; v < 6; ++v)
        CHECK(s.graph.degree(v) == 4);
}

TEST_CASE("stellating K4 changes nothing")
{
    Graph k4 = fixtures::complete(4);
    auto rs = planar_embed(k4);
    Augmented s = stellate(k4, *rs);
    CHECK(s.graph == k4);
    CHECK(s.trace.added_vertices.empty());
}

TEST_CASE("stellating W4")
{
    Graph w = fixtures::wheel(4);
    Augmented s = stellate(w, *planar_embed(w));
    CHECK(s.graph.vertex_count() == 6);
    CHECK(s.graph.edge_count() == 12);
    CHECK(faces(s.graph, s.rotation).faces.size() == 8);
}

TEST_CASE("stellate rejects faces that repeat a vertex")
{
    Graph bow = fixtures::bowtie();
    try {
        stellate(bow, *planar_embed(bow));
        FAIL("expected NotTwoConnected");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::NotTwoConnected);
    }
}

TEST_CASE("augment then stellate on random blocks, with exact rollback")
{
    random_graphs::Rng rng(21);
    for (int round = 0; round < 25; ++round) {
        Graph g = random_graphs::nicely_planar_block(4 + static_cast<int>(rng() % 16), rng);
        REQUIRE(oracle::k_connected(g, 2));
        REQUIRE(oracle::separating_triangles(g).empty());
        RotationSystem rs = *planar_embed(g);
        Augmented a = augment_to_three_connected(g, rs);
        check_three_connected_supergraph(g, a);
        Augmented s = stellate(a.graph, a.rotation);
        CHECK(s.graph.edge_count() == 3 * static_cast<std::size_t>(s.graph.vertex_count()) - 6);
        CHECK(oracle::separating_triangles(s.graph).empty());

        AugmentationTrace both = compose(a.trace, s.trace);
        Restored r = rollback(s.graph, s.rotation, both);
        CHECK(r.graph == g);
        CHECK(r.rotation == rs);
        Restored r1 = rollback(s.graph, s.rotation, s.trace);
        CHECK(r1.graph == a.graph);
        CHECK(r1.rotation == a.rotation);
    }
}

TEST_CASE("rollback rejects a trace for another graph")
{
    Graph c4 = fixtures::cycle(4);
    Augmented s = stellate(c4, *planar_embed(c4));
    AugmentationTrace bad = s.trace;
    bad.original_vertex_count = 3;
    CHECK_THROWS_AS(rollback(s.graph, s.rotation, bad), Error);
    try {
        rollback(s.graph, s.rotation, bad);
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::TraceMismatch);
    }
}
