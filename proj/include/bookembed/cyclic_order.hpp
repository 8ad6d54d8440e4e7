#pragma once

#include <vector>

#include "bookembed/graph.hpp"

namespace bookembed {

// A cyclic arrangement of distinct vertex ids, stored in canonical form:
// smallest id first and, for three or more entries, the second entry smaller
// than the last (so rotations and reflections compare equal).
class CyclicOrder {
public:
    CyclicOrder() = default;
    explicit CyclicOrder(std::vector<Vertex> order);

    const std::vector<Vertex> &order() const { return order_; }
    std::size_t size() const { return order_.size(); }
    bool empty() const { return order_.empty(); }

    // position()[v] is the index of v in order(), -1 when absent. Sized to
    // max id + 1.
    std::vector<int> positions() const;

    friend bool operator==(const CyclicOrder &, const CyclicOrder &) = default;

private:
    std::vector<Vertex> order_;
};

// True iff b lies on the way from a to c going forward around the cycle
// (a, b, c distinct).
bool cyclically_between(const std::vector<int> &position, Vertex a, Vertex b, Vertex c);

} // namespace bookembed
