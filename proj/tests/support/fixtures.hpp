#pragma once

#include <utility>
#include <vector>

#include "bookembed/graph.hpp"

namespace fixtures {

using bookembed::Edge;
using bookembed::Graph;

inline Graph make(int n, std::vector<std::pair<int, int>> edges)
{
    std::vector<Edge> es;
    for (auto [a, b] : edges)
        es.emplace_back(a, b);
    return Graph(n, es);
}

inline Graph cycle(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return make(n, e);
}

inline Graph path(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return make(n, e);
}

inline Graph complete(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            e.emplace_back(a, b);
    return make(n, e);
}

inline Graph star(int leaves)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return make(leaves + 1, e);
}

// Cycle 0..k-1 plus hub k.
inline Graph wheel(int k)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, (i + 1) % k);
        e.emplace_back(i, k);
    }
    return make(k + 1, e);
}

// Two triangles sharing vertex 2.
inline Graph bowtie()
{
    return make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
}

// Triangle {a,b,c} = {0,1,2} with pendant edges from a = 0 to 3, 4, 5, and a
// disjoint triangle {6,7,8}.
inline Graph bonnet()
{
    return make(9, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {6, 7}, {7, 8}, {6, 8}});
}

// K_{2,2,2}: antipodal pairs {0,1}, {2,3}, {4,5} are the only non-edges.
inline Graph octahedron()
{
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if (b != a + 1 || a % 2 == 1)
                e.emplace_back(a, b);
    return make(6, e);
}

// Octahedron with vertex 6 inside face {0,2,4}.
inline Graph octahedron_with_inner_vertex()
{
    std::vector<Edge> e = octahedron().edges();
    e.emplace_back(0, 6);
    e.emplace_back(2, 6);
    e.emplace_back(4, 6);
    return Graph(7, e);
}

// K4 on {0,1,2,3} with pendant vertex 4 on vertex 3.
inline Graph k4_pendant()
{
    return make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

} // namespace fixtures
