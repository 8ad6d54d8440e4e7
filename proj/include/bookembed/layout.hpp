#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bookembed/cyclic_order.hpp"
#include "bookembed/graph.hpp"

namespace bookembed {

// Spine order plus a page (>= 1) for every edge.
struct BookLayout {
    CyclicOrder spine;
    std::map<Edge, int> pages;
    int page_count = 0;

    friend bool operator==(const BookLayout &, const BookLayout &) = default;
};

// Number of distinct page indices in use.
int count_pages(const std::map<Edge, int> &pages);

// Two chords with four distinct endpoints cross iff exactly one endpoint of
// the second lies strictly inside the arc spanned by the first.
bool chords_cross(const std::vector<int> &position, const Edge &a, const Edge &b);

// Vertices are the edges of g (indexed as in g.edges()); two are adjacent
// when the chords cross under `order`.
Graph conflict_graph(const Graph &g, const CyclicOrder &order);

// Proper coloring of the conflict graph with at most `pages` colors. Uses a
// bipartition test for pages == 2 and exact backtracking above that. Pages are
// numbered from 1 in order of first use along g.edges().
std::optional<BookLayout> assign_pages(const Graph &g, const CyclicOrder &order, int pages);

struct Violation {
    Edge first;
    Edge second;
    int page = 0;
    friend bool operator==(const Violation &, const Violation &) = default;
};

// Every pair of same-page crossing chords. Throws CoverageError when the spine
// is not exactly g's vertex set or the page map is not exactly g's edge set.
std::vector<Violation> verify_layout(const Graph &g, const BookLayout &layout);

// Exact chromatic number by increasing k from a clique lower bound.
int chromatic_number(const Graph &g);
// Proper coloring with colors 0..k-1, or nullopt.
std::optional<std::vector<int>> color_with(const Graph &g, int k);

struct OracleOptions {
    int max_vertices = 9;
    unsigned threads = 1;
};

// Exact book thickness: minimum over the (n-1)!/2 canonical cyclic orders of
// the chromatic number of the conflict graph. Throws TooLarge past
// max_vertices. Edgeless graphs have book thickness 0.
int pagenumber_oracle(const Graph &g, const OracleOptions &options = {});

} // namespace bookembed
