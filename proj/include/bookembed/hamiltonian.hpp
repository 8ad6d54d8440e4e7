#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bookembed/augment.hpp"
#include "bookembed/cyclic_order.hpp"
#include "bookembed/graph.hpp"

namespace bookembed {

struct HamiltonianCycle {
    std::vector<Vertex> order;
};

struct HamiltonianOptions {
    // Search steps (path extensions and rotations) before giving up with
    // BudgetExceeded.
    std::uint64_t node_budget = 200'000'000;
};

struct HamiltonianStats {
    std::uint64_t nodes = 0;
};

// Seeded rotation-extension first, then exhaustive backtracking over paths
// grown from both ends; both share the node budget. nullopt means no
// Hamiltonian cycle exists; running out of budget throws BudgetExceeded.
std::optional<HamiltonianCycle> hamiltonian_cycle(const Graph &g, const HamiltonianOptions &options = {},
                                                  HamiltonianStats *stats = nullptr);

bool is_hamiltonian_cycle(const Graph &g, const std::vector<Vertex> &order);

// Cyclic order of the original vertices left after dropping the trace's added
// vertices from the cycle.
CyclicOrder spine_order(const HamiltonianCycle &cycle, const AugmentationTrace &trace);

// Joins consecutive vertices of `order` that are not yet adjacent. Throws
// NotSubhamiltonianOrder unless g has a two-page layout under `order`.
Graph subhamiltonian_completion(const Graph &g, const CyclicOrder &order);

} // namespace bookembed
