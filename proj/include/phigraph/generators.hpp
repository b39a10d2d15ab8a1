#pragma once

#include "phigraph/graph.hpp"

#include <cstdint>

namespace phigraph {

// SplitMix64: the pseudorandom source for every generator in this library.
// Fixed algorithm, fixed constants, no platform dependence — identical
// seeds produce identical graphs on every build.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection sampling (no modulo bias).
    std::uint64_t bounded(std::uint64_t n);

    // True with probability p (p in [0, 1]).
    bool bernoulli(double p);

private:
    std::uint64_t state_;
};

struct GenSpec {
    int n = 1;
    int k = 1;               // degeneracy bound (k-degenerate mode)
    double edge_prob = 1.0;  // per-candidate keep probability
    std::uint64_t seed = 0;
};

// Uniform random labeled tree by Prüfer decoding; |E| = n-1, connected.
Graph random_tree(int n, std::uint64_t seed);

// Vertices added in order 0..n-1; each new vertex picks up to k earlier
// neighbors (candidates visited in shuffled order, kept with edge_prob).
// The construction order is an outdegree-<=k orientation, so mad <= 2k.
Graph random_k_degenerate(const GenSpec& spec);

}  // namespace phigraph
