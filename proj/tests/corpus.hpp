#pragma once

#include "phigraph/graph.hpp"

#include <utility>
#include <vector>

namespace corpus {

inline phigraph::Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return phigraph::Graph::from_edges(n, std::move(edges));
}

inline phigraph::Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return phigraph::Graph::from_edges(n, std::move(edges));
}

inline phigraph::Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return phigraph::Graph::from_edges(n, std::move(edges));
}

// K_{1,leaves}: center is vertex 0.
inline phigraph::Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return phigraph::Graph::from_edges(leaves + 1, std::move(edges));
}

inline phigraph::Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);          // outer pentagon
        edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        edges.emplace_back(v, 5 + v);                // spokes
    }
    return phigraph::Graph::from_edges(10, std::move(edges));
}

}  // namespace corpus
