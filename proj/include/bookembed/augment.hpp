#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "bookembed/graph.hpp"

namespace bookembed {

using Triangle = std::array<Vertex, 3>;

enum class AddedKind { Stellation, SeparationBridge };

// One vertex introduced by augmentation. For a stellation point, `attachments`
// is the boundary walk of the stellated face; for a separation bridge it is
// the triple (v, last neighbor of v in one component, first neighbor of v in
// the next).
struct AddedVertex {
    Vertex id = 0;
    AddedKind kind = AddedKind::Stellation;
    std::vector<Vertex> attachments;
    friend bool operator==(const AddedVertex &, const AddedVertex &) = default;
};

// Vertices 0..original_vertex_count-1 are the input's; added vertices follow
// densely in the order listed. Every added edge has an added endpoint.
struct AugmentationTrace {
    int original_vertex_count = 0;
    std::vector<AddedVertex> added_vertices;
    std::vector<Edge> added_edges;
    friend bool operator==(const AugmentationTrace &, const AugmentationTrace &) = default;
};

struct Augmented {
    Graph graph;
    RotationSystem rotation;
    AugmentationTrace trace;
    // Separating-pair count before each bridging round (augment only).
    std::vector<std::size_t> separating_pair_history;
};

// Triangles as sorted triples, sorted lexicographically.
std::vector<Triangle> enumerate_triangles(const Graph &g);

// Triangles whose three vertices, once deleted, leave more components.
std::vector<Triangle> separating_triangles(const Graph &g);

// True iff g has no separating triangle. g must be 2-connected (or have at
// most two vertices) and planar; throws NotTwoConnected or NotPlanar.
bool is_nicely_planar_block(const Graph &g);

// Adds bridge vertices until no separating pair remains. The result is
// 3-connected, plane, free of separating triangles and induces g on the
// original vertices. Throws PreconditionViolated.
Augmented augment_to_three_connected(const Graph &g, const RotationSystem &rs);

// Stellates every face longer than three, yielding a triangulation. Throws
// NotTwoConnected (including faces whose walk repeats a vertex) or
// NotPlaneEmbedding.
Augmented stellate(const Graph &g, const RotationSystem &rs);

// Traces applied one after the other, as a single trace against the first
// input.
AugmentationTrace compose(const AugmentationTrace &first, const AugmentationTrace &second);

struct Restored {
    Graph graph;
    RotationSystem rotation;
};

// Deletes the added vertices and their edges. Throws TraceMismatch when the
// trace does not describe `g`.
Restored rollback(const Graph &g, const RotationSystem &rs, const AugmentationTrace &trace);

} // namespace bookembed
