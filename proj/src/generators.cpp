#include "phigraph/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace phigraph {

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("bounded: n must be positive");
    std::uint64_t threshold = -n % n;  // 2^64 mod n
    for (;;) {
        std::uint64_t x = next();
        if (x >= threshold) return x % n;
    }
}

bool SplitMix64::bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    // Compare against p * 2^64 computed in long double to keep the
    // threshold deterministic across builds.
    auto threshold = static_cast<std::uint64_t>(
        static_cast<long double>(p) * 18446744073709551616.0L);
    return next() < threshold;
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});

    SplitMix64 rng(seed);
    std::vector<int> prufer(n - 2);
    for (int& s : prufer) s = static_cast<int>(rng.bounded(n));

    // Standard O(n) decode with a moving pointer over the smallest leaf.
    std::vector<int> degree(n, 1);
    for (int s : prufer) ++degree[s];

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : prufer) {
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph::from_edges(n, std::move(edges));
}

Graph random_k_degenerate(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("random_k_degenerate: n must be >= 1");
    if (spec.k < 1) throw std::invalid_argument("random_k_degenerate: k must be >= 1");
    if (spec.edge_prob < 0.0 || spec.edge_prob > 1.0)
        throw std::invalid_argument("random_k_degenerate: edge_prob not in [0,1]");

    SplitMix64 rng(spec.seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> candidates;
    for (int v = 1; v < spec.n; ++v) {
        candidates.resize(v);
        for (int i = 0; i < v; ++i) candidates[i] = i;
        // Fisher-Yates with the library RNG.
        for (int i = v - 1; i > 0; --i)
            std::swap(candidates[i], candidates[rng.bounded(i + 1)]);
        int taken = 0;
        for (int c : candidates) {
            if (taken == spec.k) break;
            if (rng.bernoulli(spec.edge_prob)) {
                edges.emplace_back(c, v);
                ++taken;
            }
        }
    }
    return Graph::from_edges(spec.n, std::move(edges));
}

}  // namespace phigraph
