#pragma once

#include <cstdint>

#include "bookembed/generators.hpp"
#include "bookembed/graph.hpp"
#include "bookembed/hamiltonian.hpp"
#include "bookembed/layout.hpp"

namespace bookembed {

struct PipelineStats {
    int blocks = 0;
    int bridge_vertices = 0;
    int stellation_vertices = 0;
    std::uint64_t hamiltonian_nodes = 0;
};

struct EmbedResult {
    BookLayout layout;
    PipelineStats stats;
};

struct EmbedOptions {
    HamiltonianOptions hamiltonian;
};

// Two-page layout of a graph whose blocks are all free of separating
// triangles. Each block is made 3-connected, stellated into a triangulation,
// given a Hamiltonian cycle, and laid out on the cycle's order restricted to
// the block; block layouts are then spliced at cutpoints. Outerplanar blocks
// skip the chain and go on one page along their outer cycle.
// Throws NotPlanar, NotNicelyPlanar (naming a separating triangle) or
// InternalGuaranteeViolated.
EmbedResult two_page_embed(const Graph &g, const EmbedOptions &options = {});

struct HomeomorphicLayout {
    Graph subdivided;
    SubdivisionMap subdivision;
    BookLayout layout;
    // Subdivision vertices whose two path edges sit on different pages.
    int spine_crossings = 0;
    PipelineStats stats;
};

// Subdivides every edge once (all cycles become even) and lays out the
// result on two pages. Throws NotPlanar.
HomeomorphicLayout homeomorphic_two_page(const Graph &g, const EmbedOptions &options = {});

int count_spine_crossings(const Graph &subdivided, const SubdivisionMap &paths, const BookLayout &layout);

} // namespace bookembed
