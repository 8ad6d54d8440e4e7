#include "bookembed/planar.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "bookembed/error.hpp"

namespace bookembed {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

} // namespace

std::optional<RotationSystem> planar_embed(const Graph &g)
{
    const int n = g.vertex_count();
    if (n >= 3 && g.edge_count() > static_cast<std::size_t>(3 * n - 6))
        return std::nullopt;

    BoostGraph bg(static_cast<std::size_t>(n));
    int index = 0;
    for (const Edge &e : g.edges()) {
        auto [d, ok] = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
        (void)ok;
        boost::put(boost::edge_index, bg, d, index++);
    }

    std::vector<std::vector<BoostEdge>> embedding(static_cast<std::size_t>(n));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
    if (!planar)
        return std::nullopt;

    RotationSystem rs;
    rs.rotation.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        for (const BoostEdge &d : embedding[v]) {
            auto s = static_cast<Vertex>(boost::source(d, bg));
            auto t = static_cast<Vertex>(boost::target(d, bg));
            rs.rotation[v].push_back(s == v ? t : s);
        }
    try {
        validate_embedding(g, rs);
    } catch (const Error &err) {
        throw Error(ErrorKind::InternalGuaranteeViolated, std::string("planarity embedding rejected: ") + err.what());
    }
    return rs;
}

FaceSet faces(const Graph &g, const RotationSystem &rs)
{
    return validate_embedding(g, rs);
}

bool is_outerplanar(const Graph &g)
{
    const int n = g.vertex_count();
    std::vector<Edge> apex_edges;
    for (Vertex v = 0; v < n; ++v)
        apex_edges.emplace_back(v, n);
    return planar_embed(extend_graph(g, n + 1, apex_edges)).has_value();
}

} // namespace bookembed
