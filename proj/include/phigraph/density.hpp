#pragma once

#include "phigraph/graph.hpp"
#include "phigraph/rational.hpp"

namespace phigraph {

// A vertex set attaining the reported density |E(H)|/|V(H)| exactly.
struct DensityWitness {
    VertexSet subgraph;
    Rational density;
};

// Exact maximum subgraph density via min-cut feasibility tests on integer
// guesses p/q with q = n'(n'-1) (n' = non-isolated vertex count): distinct
// achievable densities differ by at least 1/q, so a witness within that gap
// of the upper bracket is optimal. Witness density is always recomputed
// exactly from the recovered cut. Edgeless graphs report density 0 with a
// singleton witness.
DensityWitness max_density_exact(const Graph& g);

// mad(g) = 2 * max density, exactly.
Rational mad(const Graph& g);

// Exhaustive over all nonempty vertex subsets; n <= 20 enforced.
DensityWitness brute_force_density(const Graph& g);

}  // namespace phigraph
