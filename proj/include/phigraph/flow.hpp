#pragma once

#include <cstdint>
#include <vector>

namespace phigraph {

// Directed flow network with integer capacities. Arcs are stored in a flat
// vector; the reverse arc of arc i is arc i^1, so residual updates are a
// pair of index operations.
struct FlowNetwork {
    struct Arc {
        int to;
        long long cap;
    };

    int node_count = 0;
    int source = -1;
    int sink = -1;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;  // out[v] = indices of arcs leaving v

    explicit FlowNetwork(int nodes, int source_node, int sink_node)
        : node_count(nodes), source(source_node), sink(sink_node), out(nodes) {}

    // Adds forward arc with the given capacity plus a zero-capacity reverse
    // arc; returns the forward arc index.
    int add_arc(int from, int to, long long cap);
};

struct MaxFlowResult {
    long long value = 0;
    std::vector<long long> flow;          // per arc index (reverse arcs negative)
    std::vector<bool> source_side;        // min-cut side reachable in residual
};

// Dinic's algorithm (BFS level graph + blocking flow). Deterministic: arcs
// are scanned in insertion order.
MaxFlowResult max_flow(const FlowNetwork& net);

}  // namespace phigraph
