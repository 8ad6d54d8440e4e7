#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bookembed/generators.hpp"
#include "bookembed/graph.hpp"
#include "bookembed/layout.hpp"

namespace bookembed {

// Edge-list text: optional header `p <n> <m>`, then one `u v` pair per line.
// `#` starts a comment; blank lines and extra whitespace are ignored. Without
// a header, n is one more than the largest id. Throws ParseError with the
// line number, or the graph validation errors.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph &g);

struct Provenance {
    std::string mode = "two-page";
    int blocks = 0;
    int bridge_vertices = 0;
    int stellation_vertices = 0;
    std::uint64_t hamiltonian_nodes = 0;
    // Homeomorphic mode: the input graph's size and the subdivision paths.
    std::optional<int> original_n;
    std::optional<SubdivisionMap> subdivision;
    friend bool operator==(const Provenance &, const Provenance &) = default;
};

struct LayoutReport {
    Graph graph;
    BookLayout layout;
    Provenance provenance;
    std::optional<int> spine_crossings;
    friend bool operator==(const LayoutReport &, const LayoutReport &) = default;
};

// Keys: n, edges, spine, pages ("u-v" -> page), page_count, provenance and
// optionally spine_crossings; sorted keys, two-space indent, trailing newline.
std::string emit_layout_json(const LayoutReport &report);
LayoutReport parse_layout_json(std::string_view text);

// Spine drawn left to right in spine order; page 1 arcs above, page 2 below,
// higher pages above as taller arcs in their own colors. Throws InvalidLayout
// unless verify_layout(g, layout) is clean.
std::string emit_svg(const Graph &g, const BookLayout &layout);

} // namespace bookembed
