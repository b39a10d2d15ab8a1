#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phigraph {

// Parse failure for edge-list documents; carries the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Simple undirected graph. Immutable after construction: edges are
// normalized (u < v, lexicographically sorted), degrees precomputed,
// adjacency stored in CSR form. Safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Validates: ids in range, no self-loops, no duplicate edges.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    // Edge-list document: "u v" per line, '#' comments and blank lines
    // ignored, optional leading "n <count>" header for isolated vertices.
    static Graph from_edge_list(const std::string& text);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int degree(int v) const { return degree_[v]; }
    const std::vector<int>& degrees() const { return degree_; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
    }

    int max_degree() const;

    std::string to_edge_list(bool with_header = true) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degree_;
    std::vector<int> adj_offset_;
    std::vector<int> adj_;

    void build_adjacency();
};

// Sorted duplicate-free vertex ids.
struct VertexSet {
    std::vector<int> ids;

    static VertexSet of(std::vector<int> raw);
    int size() const { return static_cast<int>(ids.size()); }
    bool contains(int v) const;
};

std::vector<int> degree_sequence(const Graph& g);

// Keeps edges with both endpoints in s; vertices relabeled 0..|s|-1 in
// ascending id order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace phigraph
