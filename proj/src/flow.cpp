#include "phigraph/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace phigraph {

int FlowNetwork::add_arc(int from, int to, long long cap) {
    if (cap < 0) throw std::invalid_argument("FlowNetwork: negative capacity");
    int idx = static_cast<int>(arcs.size());
    arcs.push_back({to, cap});
    out[from].push_back(idx);
    arcs.push_back({from, 0});
    out[to].push_back(idx + 1);
    return idx;
}

namespace {

class Dinic {
public:
    explicit Dinic(const FlowNetwork& net)
        : net_(net), residual_(net.arcs.size()), level_(net.node_count), iter_(net.node_count) {
        for (std::size_t i = 0; i < net.arcs.size(); ++i) residual_[i] = net.arcs[i].cap;
    }

    long long run() {
        long long total = 0;
        while (bfs()) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (long long pushed = dfs(net_.source, std::numeric_limits<long long>::max()))
                total += pushed;
        }
        return total;
    }

    const std::vector<long long>& residual() const { return residual_; }

    std::vector<bool> reachable_from_source() const {
        std::vector<bool> seen(net_.node_count, false);
        std::queue<int> q;
        q.push(net_.source);
        seen[net_.source] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int idx : net_.out[u]) {
                int v = net_.arcs[idx].to;
                if (!seen[v] && residual_[idx] > 0) {
                    seen[v] = true;
                    q.push(v);
                }
            }
        }
        return seen;
    }

private:
    bool bfs() {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[net_.source] = 0;
        q.push(net_.source);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int idx : net_.out[u]) {
                int v = net_.arcs[idx].to;
                if (level_[v] < 0 && residual_[idx] > 0) {
                    level_[v] = level_[u] + 1;
                    q.push(v);
                }
            }
        }
        return level_[net_.sink] >= 0;
    }

    long long dfs(int u, long long limit) {
        if (u == net_.sink) return limit;
        for (int& i = iter_[u]; i < static_cast<int>(net_.out[u].size()); ++i) {
            int idx = net_.out[u][i];
            int v = net_.arcs[idx].to;
            if (residual_[idx] <= 0 || level_[v] != level_[u] + 1) continue;
            long long pushed = dfs(v, std::min(limit, residual_[idx]));
            if (pushed > 0) {
                residual_[idx] -= pushed;
                residual_[idx ^ 1] += pushed;
                return pushed;
            }
        }
        level_[u] = -1;
        return 0;
    }

    const FlowNetwork& net_;
    std::vector<long long> residual_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
    if (net.source < 0 || net.sink < 0 || net.source == net.sink)
        throw std::invalid_argument("max_flow: bad source/sink");
    Dinic solver(net);
    MaxFlowResult result;
    result.value = solver.run();
    result.flow.resize(net.arcs.size());
    for (std::size_t i = 0; i < net.arcs.size(); ++i)
        result.flow[i] = net.arcs[i].cap - solver.residual()[i];
    result.source_side = solver.reachable_from_source();
    return result;
}

}  // namespace phigraph
