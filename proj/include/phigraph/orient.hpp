#pragma once

#include "phigraph/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phigraph {

// Direction assignment for every edge of a host graph. direction[e] refers
// to the host's normalized edge list: true means the edge (u,v) with u < v
// is oriented u -> v (u is the tail and pays the outdegree unit).
struct Orientation {
    const Graph* host = nullptr;
    std::vector<bool> u_is_tail;
    std::vector<int> outdeg;
    std::vector<int> indeg;

    static Orientation from_tails(const Graph& g, std::vector<bool> u_is_tail);

    int tail(int edge_index) const {
        const auto& [u, v] = host->edges()[edge_index];
        return u_is_tail[edge_index] ? u : v;
    }
    int head(int edge_index) const {
        const auto& [u, v] = host->edges()[edge_index];
        return u_is_tail[edge_index] ? v : u;
    }

    int max_outdegree() const;

    // One arc per line, "tail -> head", normalized edge order.
    std::string serialize() const;
};

// Hakimi decision + construction: an orientation with max outdegree <= k,
// or nullopt when none exists (iff mad(g) > 2k). Flow network: one node per
// edge and per vertex, source->edge cap 1, edge->endpoints cap 1,
// vertex->sink cap k; feasible iff max flow == |E|.
std::optional<Orientation> orient_bounded_outdegree(const Graph& g, int k);

bool verify_orientation(const Orientation& o, int k);

// Smallest k admitting a bounded orientation (= ceil(mad/2)); 0 for an
// edgeless graph.
int pseudoarboricity(const Graph& g);

// Orients every edge of a tree toward the given root (each non-root vertex
// has outdegree exactly 1). Requires g connected and acyclic.
Orientation root_ward_orientation(const Graph& tree, int root);

}  // namespace phigraph
