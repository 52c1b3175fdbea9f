#pragma once

#include <utility>
#include <vector>

#include "qrkg/graph.hpp"
#include "qrkg/rng.hpp"

namespace qrkg::testing {

inline UndirectedGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return UndirectedGraph::from_edges(n, std::move(edges));
}

inline UndirectedGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return UndirectedGraph::from_edges(n, std::move(edges));
}

inline UndirectedGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return UndirectedGraph::from_edges(n, std::move(edges));
}

inline UndirectedGraph empty_graph(int n) { return UndirectedGraph::from_edges(n, {}); }

// center 0, leaves 1..n-1
inline UndirectedGraph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return UndirectedGraph::from_edges(leaves + 1, std::move(edges));
}

inline UndirectedGraph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);          // outer cycle
        edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        edges.emplace_back(v, 5 + v);                // spokes
    }
    return UndirectedGraph::from_edges(10, std::move(edges));
}

// two triangles {0,1,2} and {3,4,5} joined by the single edge 2-3
inline UndirectedGraph two_triangles_bridged() {
    return UndirectedGraph::from_edges(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

inline UndirectedGraph random_graph(int n, double p, std::uint64_t key) {
    Xoshiro256 rng(key);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) edges.emplace_back(i, j);
    return UndirectedGraph::from_edges(n, std::move(edges));
}

}  // namespace qrkg::testing
