#pragma once

#include <optional>

#include "bookembed/graph.hpp"

namespace bookembed {

// Rotation system of a plane embedding, or nullopt when g is not planar.
// Deterministic for a fixed graph.
std::optional<RotationSystem> planar_embed(const Graph &g);

// Face walks of a plane embedding. The outer face is a longest walk, ties
// broken by the smallest contained vertex id. Throws NotPlaneEmbedding.
FaceSet faces(const Graph &g, const RotationSystem &rs);

// g plus an apex joined to every vertex is planar.
bool is_outerplanar(const Graph &g);

} // namespace bookembed
