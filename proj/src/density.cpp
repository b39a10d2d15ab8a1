#include "phigraph/density.hpp"

#include "phigraph/flow.hpp"

#include <algorithm>
#include <stdexcept>

namespace phigraph {

namespace {

Rational exact_density(const Graph& g, const VertexSet& s) {
    Graph h = induced_subgraph(g, s);
    return Rational(BigInt(h.edge_count()), BigInt(std::max(1, h.vertex_count())));
}

// Min-cut feasibility: does some subgraph have density strictly above p/q?
// Network: source -> edge node (cap q), edge node -> endpoints (cap inf),
// vertex node -> sink (cap p). Max flow < q*m iff such a subgraph exists;
// the source side of the cut then yields one.
struct GuessResult {
    bool feasible;
    VertexSet witness;
};

GuessResult test_density_guess(const Graph& g, const std::vector<int>& vertices,
                               long long p, long long q) {
    const int m = g.edge_count();
    const int n = static_cast<int>(vertices.size());
    std::vector<int> index(g.vertex_count(), -1);
    for (int i = 0; i < n; ++i) index[vertices[i]] = i;

    const int source = m + n;
    const int sink = source + 1;
    const long long inf = q * static_cast<long long>(m) + 1;
    FlowNetwork net(sink + 1, source, sink);
    for (int e = 0; e < m; ++e) {
        net.add_arc(source, e, q);
        net.add_arc(e, m + index[g.edges()[e].first], inf);
        net.add_arc(e, m + index[g.edges()[e].second], inf);
    }
    for (int i = 0; i < n; ++i) net.add_arc(m + i, sink, p);

    MaxFlowResult result = max_flow(net);
    if (result.value >= q * static_cast<long long>(m)) return {false, {}};

    std::vector<int> ids;
    for (int i = 0; i < n; ++i)
        if (result.source_side[m + i]) ids.push_back(vertices[i]);
    if (ids.empty()) return {false, {}};
    return {true, VertexSet::of(std::move(ids))};
}

}  // namespace

DensityWitness max_density_exact(const Graph& g) {
    std::vector<int> active;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) active.push_back(v);

    if (active.empty()) {
        // Edgeless: density 0; a singleton witness (or empty set for n = 0).
        VertexSet w = g.vertex_count() > 0 ? VertexSet::of({0}) : VertexSet{};
        return {w, Rational(0)};
    }

    const long long np = static_cast<long long>(active.size());
    const long long grid = np * (np - 1);  // distinct densities differ by >= 1/grid

    VertexSet witness = VertexSet::of(active);
    Rational lo = exact_density(g, witness);
    Rational hi(BigInt(g.max_degree()));
    const Rational gap(BigInt(1), BigInt(grid));

    while (hi - lo >= gap) {
        // Pick a grid point strictly inside (lo, hi) if one exists.
        Rational mid = (lo + hi) * Rational(BigInt(1), BigInt(2));
        BigInt pb = div_round(mid.num() * grid, mid.den(), Rounding::Down);
        Rational guess(pb, BigInt(grid));
        if (guess <= lo) guess = Rational(pb + 1, BigInt(grid));
        if (guess >= hi) break;  // no grid point strictly inside

        auto r = test_density_guess(g, active, guess.num().convert_to<long long>(),
                                    guess.den().convert_to<long long>());
        if (r.feasible) {
            Rational d = exact_density(g, r.witness);
            if (d > lo) { lo = d; witness = r.witness; }
        } else {
            hi = guess;
        }
    }

    // Bracket narrower than the grid (or no interior grid point): confirm lo
    // is not beatable by testing lo itself.
    auto r = test_density_guess(g, active, lo.num().convert_to<long long>(),
                                lo.den().convert_to<long long>());
    while (r.feasible) {
        Rational d = exact_density(g, r.witness);
        if (d <= lo) throw std::logic_error("density search: witness not improving");
        lo = d;
        witness = r.witness;
        r = test_density_guess(g, active, lo.num().convert_to<long long>(),
                               lo.den().convert_to<long long>());
    }
    return {witness, lo};
}

Rational mad(const Graph& g) {
    return max_density_exact(g).density * Rational(BigInt(2));
}

DensityWitness brute_force_density(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("brute_force_density: n > 20");
    if (g.edge_count() == 0) {
        VertexSet w = n > 0 ? VertexSet::of({0}) : VertexSet{};
        return {w, Rational(0)};
    }

    std::vector<std::uint32_t> adj_mask(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj_mask[u] |= 1u << v;
        adj_mask[v] |= 1u << u;
    }

    std::uint32_t best_mask = 1;
    Rational best(0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int vertices = __builtin_popcount(mask);
        long long twice_edges = 0;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            twice_edges += __builtin_popcount(adj_mask[v] & mask);
        }
        Rational d(BigInt(twice_edges / 2), BigInt(vertices));
        if (d > best) { best = d; best_mask = mask; }
    }

    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
        if (best_mask & (1u << v)) ids.push_back(v);
    return {VertexSet::of(std::move(ids)), best};
}

}  // namespace phigraph
