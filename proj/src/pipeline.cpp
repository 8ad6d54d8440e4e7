#include "bookembed/pipeline.hpp"

#include "bookembed/augment.hpp"
#include "bookembed/connectivity.hpp"
#include "bookembed/error.hpp"
#include "bookembed/planar.hpp"

namespace bookembed {

namespace {

[[noreturn]] void guarantee_failed(const std::string &what)
{
    throw Error(ErrorKind::InternalGuaranteeViolated, what);
}

// A 2-connected outerplanar block on one page, in the order its vertices
// appear around an added apex.
std::optional<BookLayout> outerplanar_layout(const Graph &block)
{
    const int n = block.vertex_count();
    std::vector<Edge> spokes;
    for (Vertex v = 0; v < n; ++v)
        spokes.emplace_back(v, n);
    auto rs = planar_embed(extend_graph(block, n + 1, spokes));
    if (!rs)
        return std::nullopt;
    return assign_pages(block, CyclicOrder(rs->rotation[n]), 1);
}

// Layout of one block in its local numbering.
BookLayout layout_block(const Graph &block, const EmbedOptions &options, PipelineStats &stats)
{
    const int n = block.vertex_count();
    if (n <= 2) {
        std::vector<Vertex> order;
        for (Vertex v = 0; v < n; ++v)
            order.push_back(v);
        BookLayout layout;
        layout.spine = CyclicOrder(order);
        for (const Edge &e : block.edges())
            layout.pages[e] = 1;
        layout.page_count = count_pages(layout.pages);
        return layout;
    }

    if (auto one = outerplanar_layout(block))
        return *one;

    auto rs = planar_embed(block);
    if (!rs)
        guarantee_failed("block of a planar graph is not planar");

    Augmented bridged;
    Augmented stellated;
    try {
        bridged = augment_to_three_connected(block, *rs);
        stellated = stellate(bridged.graph, bridged.rotation);
    } catch (const Error &err) {
        guarantee_failed(std::string("augmentation failed: ") + err.what());
    }
    stats.bridge_vertices += static_cast<int>(bridged.trace.added_vertices.size());
    stats.stellation_vertices += static_cast<int>(stellated.trace.added_vertices.size());

    HamiltonianStats search;
    auto cycle = hamiltonian_cycle(stellated.graph, options.hamiltonian, &search);
    stats.hamiltonian_nodes += search.nodes;
    if (!cycle)
        guarantee_failed("no Hamiltonian cycle in a triangulation without separating triangles");

    const CyclicOrder order = spine_order(*cycle, compose(bridged.trace, stellated.trace));
    auto layout = assign_pages(block, order, 2);
    if (!layout)
        guarantee_failed("restricted Hamiltonian order does not admit two pages");
    return *layout;
}

BookLayout to_global(const BookLayout &local, const std::vector<Vertex> &ids)
{
    BookLayout out;
    std::vector<Vertex> order;
    for (Vertex v : local.spine.order())
        order.push_back(ids[v]);
    out.spine = CyclicOrder(order);
    for (const auto &[e, p] : local.pages)
        out.pages[Edge(ids[e.u], ids[e.v])] = p;
    out.page_count = local.page_count;
    return out;
}

} // namespace

EmbedResult two_page_embed(const Graph &g, const EmbedOptions &options)
{
    if (!planar_embed(g))
        throw Error(ErrorKind::NotPlanar, "graph is not planar");

    EmbedResult result;
    const BlockCutTree tree = blocks_and_cutpoints(g);
    result.stats.blocks = static_cast<int>(tree.blocks.size());

    std::map<std::size_t, BookLayout> per_block;
    for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
        const InducedSubgraph sub = induced_subgraph(g, tree.blocks[b]);
        if (sub.graph.vertex_count() > 2) {
            auto sep = separating_triangles(sub.graph);
            if (!sep.empty()) {
                const auto &t = sep.front();
                throw Error(ErrorKind::NotNicelyPlanar,
                            "separating triangle {" + std::to_string(sub.local_to_global[t[0]]) + "," +
                                std::to_string(sub.local_to_global[t[1]]) + "," +
                                std::to_string(sub.local_to_global[t[2]]) +
                                "}; the homeomorphic (subdivided) two-page layout still applies");
            }
        }
        per_block[b] = to_global(layout_block(sub.graph, options, result.stats), sub.local_to_global);
    }

    try {
        result.layout = merge_layouts(tree, per_block);
    } catch (const Error &err) {
        guarantee_failed(std::string("block merge failed: ") + err.what());
    }
    if (!verify_layout(g, result.layout).empty())
        guarantee_failed("merged layout has crossing chords on one page");
    if (result.layout.page_count > 2)
        guarantee_failed("merged layout uses more than two pages");
    return result;
}

int count_spine_crossings(const Graph &subdivided, const SubdivisionMap &paths, const BookLayout &layout)
{
    (void)subdivided;
    int crossings = 0;
    for (const auto &[e, path] : paths) {
        Vertex prev = e.u;
        for (std::size_t i = 0; i < path.size(); ++i) {
            Vertex next = i + 1 < path.size() ? path[i + 1] : e.v;
            if (layout.pages.at(Edge(prev, path[i])) != layout.pages.at(Edge(path[i], next)))
                ++crossings;
            prev = path[i];
        }
    }
    return crossings;
}

HomeomorphicLayout homeomorphic_two_page(const Graph &g, const EmbedOptions &options)
{
    if (!planar_embed(g))
        throw Error(ErrorKind::NotPlanar, "graph is not planar");
    Subdivision sub = subdivide(g, 1);
    HomeomorphicLayout out;
    EmbedResult embedded;
    try {
        embedded = two_page_embed(sub.graph, options);
    } catch (const Error &err) {
        if (err.kind() == ErrorKind::NotNicelyPlanar || err.kind() == ErrorKind::NotPlanar)
            guarantee_failed(std::string("subdivision rejected: ") + err.what());
        throw;
    }
    out.spine_crossings = count_spine_crossings(sub.graph, sub.paths, embedded.layout);
    out.subdivided = std::move(sub.graph);
    out.subdivision = std::move(sub.paths);
    out.layout = std::move(embedded.layout);
    out.stats = embedded.stats;
    return out;
}

} // namespace bookembed
