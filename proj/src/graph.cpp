#include "phigraph/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace phigraph {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: vertex id out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph: duplicate edge");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.degree_.assign(n, 0);
    for (const auto& [u, v] : g.edges_) {
        ++g.degree_[u];
        ++g.degree_[v];
    }
    g.build_adjacency();
    return g;
}

void Graph::build_adjacency() {
    adj_offset_.assign(n_ + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++adj_offset_[u + 1];
        ++adj_offset_[v + 1];
    }
    for (int i = 0; i < n_; ++i) adj_offset_[i + 1] += adj_offset_[i];
    adj_.resize(2 * edges_.size());
    std::vector<int> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
}

Graph Graph::from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int declared_n = -1;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<long long> seen;
    int max_id = -1;
    bool past_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        std::istringstream fields(line);
        std::string first;
        fields >> first;
        if (!past_header && first == "n") {
            long long count;
            if (!(fields >> count) || count < 0)
                throw ParseError(line_no, "malformed vertex-count header");
            std::string extra;
            if (fields >> extra) throw ParseError(line_no, "trailing tokens after header");
            declared_n = static_cast<int>(count);
            past_header = true;
            continue;
        }
        past_header = true;

        long long u, v;
        try {
            u = std::stoll(first);
        } catch (const std::exception&) {
            throw ParseError(line_no, "malformed edge line");
        }
        if (!(fields >> v)) throw ParseError(line_no, "malformed edge line");
        std::string extra;
        if (fields >> extra) throw ParseError(line_no, "trailing tokens after edge");
        if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex id");
        if (u == v) throw ParseError(line_no, "self-loop");
        long long a = std::min(u, v), b = std::max(u, v);
        if (!seen.insert(a * 0x100000000LL + b).second)
            throw ParseError(line_no, "duplicate edge");
        if (b > 0x3FFFFFFF) throw ParseError(line_no, "vertex id too large");
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        max_id = std::max(max_id, static_cast<int>(b));
    }

    int n = std::max(declared_n, max_id + 1);
    try {
        return from_edges(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

int Graph::max_degree() const {
    int best = 0;
    for (int d : degree_) best = std::max(best, d);
    return best;
}

std::string Graph::to_edge_list(bool with_header) const {
    std::ostringstream out;
    if (with_header) out << "n " << n_ << "\n";
    for (const auto& [u, v] : edges_) out << u << " " << v << "\n";
    return out.str();
}

VertexSet VertexSet::of(std::vector<int> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    return VertexSet{std::move(raw)};
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids.begin(), ids.end(), v);
}

std::vector<int> degree_sequence(const Graph& g) { return g.degrees(); }

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> relabel(g.vertex_count(), -1);
    for (int i = 0; i < s.size(); ++i) {
        int v = s.ids[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex id out of range");
        relabel[v] = i;
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) {
        if (relabel[u] >= 0 && relabel[v] >= 0) edges.emplace_back(relabel[u], relabel[v]);
    }
    return Graph::from_edges(s.size(), std::move(edges));
}

}  // namespace phigraph
