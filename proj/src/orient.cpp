#include "phigraph/orient.hpp"

#include "phigraph/flow.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace phigraph {

Orientation Orientation::from_tails(const Graph& g, std::vector<bool> u_is_tail) {
    if (static_cast<int>(u_is_tail.size()) != g.edge_count())
        throw std::invalid_argument("Orientation: direction count != edge count");
    Orientation o;
    o.host = &g;
    o.u_is_tail = std::move(u_is_tail);
    o.outdeg.assign(g.vertex_count(), 0);
    o.indeg.assign(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        ++o.outdeg[o.tail(e)];
        ++o.indeg[o.head(e)];
    }
    return o;
}

int Orientation::max_outdegree() const {
    int best = 0;
    for (int d : outdeg) best = std::max(best, d);
    return best;
}

std::string Orientation::serialize() const {
    std::ostringstream out;
    for (int e = 0; e < host->edge_count(); ++e)
        out << tail(e) << " -> " << head(e) << "\n";
    return out.str();
}

std::optional<Orientation> orient_bounded_outdegree(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("orient_bounded_outdegree: k must be >= 1");
    const int m = g.edge_count();
    const int n = g.vertex_count();
    if (m == 0) return Orientation::from_tails(g, {});

    // Nodes: 0..m-1 edge nodes, m..m+n-1 vertex nodes, then source, sink.
    const int source = m + n;
    const int sink = source + 1;
    FlowNetwork net(sink + 1, source, sink);
    std::vector<int> to_u(m), to_v(m);
    for (int e = 0; e < m; ++e) {
        net.add_arc(source, e, 1);
        to_u[e] = net.add_arc(e, m + g.edges()[e].first, 1);
        to_v[e] = net.add_arc(e, m + g.edges()[e].second, 1);
    }
    for (int v = 0; v < n; ++v) net.add_arc(m + v, sink, k);

    MaxFlowResult result = max_flow(net);
    if (result.value != m) return std::nullopt;

    std::vector<bool> u_is_tail(m);
    for (int e = 0; e < m; ++e) {
        // The endpoint receiving the edge's unit of flow is the tail.
        if (result.flow[to_u[e]] == 1) u_is_tail[e] = true;
        else if (result.flow[to_v[e]] == 1) u_is_tail[e] = false;
        else throw std::logic_error("orient: saturated edge without endpoint flow");
    }
    return Orientation::from_tails(g, std::move(u_is_tail));
}

bool verify_orientation(const Orientation& o, int k) { return o.max_outdegree() <= k; }

int pseudoarboricity(const Graph& g) {
    const int m = g.edge_count();
    if (m == 0) return 0;
    int lo = std::max(1, (m + g.vertex_count() - 1) / g.vertex_count());
    int hi = std::max(1, g.max_degree());  // any orientation has outdeg <= max degree
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (orient_bounded_outdegree(g, mid).has_value()) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

Orientation root_ward_orientation(const Graph& tree, int root) {
    const int n = tree.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("root_ward: bad root");
    if (tree.edge_count() != n - 1)
        throw std::invalid_argument("root_ward: not a tree (|E| != |V|-1)");

    std::vector<int> depth(n, -1);
    std::queue<int> q;
    q.push(root);
    depth[root] = 0;
    int visited = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : tree.neighbors(u)) {
            if (depth[v] < 0) {
                depth[v] = depth[u] + 1;
                q.push(v);
                ++visited;
            }
        }
    }
    if (visited != n) throw std::invalid_argument("root_ward: graph is disconnected");

    std::vector<bool> u_is_tail(tree.edge_count());
    for (int e = 0; e < tree.edge_count(); ++e) {
        const auto& [u, v] = tree.edges()[e];
        u_is_tail[e] = depth[u] > depth[v];  // deeper endpoint points toward the root
    }
    return Orientation::from_tails(tree, std::move(u_is_tail));
}

}  // namespace phigraph
