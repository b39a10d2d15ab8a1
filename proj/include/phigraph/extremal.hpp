#pragma once

#include "phigraph/bigint.hpp"
#include "phigraph/fixed.hpp"
#include "phigraph/graph.hpp"
#include "phigraph/interval.hpp"
#include "phigraph/orient.hpp"

#include <optional>
#include <vector>

namespace phigraph {

// Parameters of the tight tree family: R+1 levels, each level-i vertex has
// ceil(a^(phi^(i-1))) children, optionally blown up by k.
struct ExtremalParams {
    int a = 4;
    int R = 2;
    int k = 1;
    std::optional<double> epsilon;  // populated when chosen from a target
};

class MaterializeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class EvalMode { Auto, Exact, LogDomain };

// Per-level structure. Exact mode stores big-integer sizes/degrees; both
// modes carry certified log10 enclosures (in log-domain mode the enclosure
// comes from the telescoped geometric exponent sum plus the e^(2/a) ceiling
// slack when the ceilings themselves are too large to compute exactly).
struct LevelProfile {
    int a = 4;
    int R = 2;
    int precision = 50;
    bool exact = false;
    std::vector<BigInt> ceil_powers;   // c[i] = ceil(a^(phi^i)), i in [0, R-1]
    std::vector<BigInt> sizes;         // |L_j|, j in [0, R]
    std::vector<BigInt> level_degree;  // degree of a level-j vertex
    std::vector<BigInt> edge_counts;   // |E_i| = |L_{i-1}|, index i-1, i in [1, R]
    std::vector<Fixed> log10_sizes;    // midpoints of the enclosures below
    std::vector<IReal> log10_sizes_iv;
    bool sandwich_verified = false;    // a^(phi^(R+1)-phi^(j+1)) <= |L_j| <= ... * e^(2/a)
};

struct TightnessReport {
    ExtremalParams params;
    int precision = 50;
    bool exact = false;
    std::optional<BigInt> lhs_exact;  // sum over edges of d(u)d(v), k^4-scaled
    std::optional<Fixed> rhs_value;   // k^(2-phi)-scaled degree power sum
    Fixed log10_lhs;
    Fixed log10_rhs;
    double measured_ratio = 0.0;  // rhs / lhs
    double epsilon_bound = 0.0;   // e^(3/a)(1 + 1/(R-1)) - 1
    bool within_bound = false;    // certified: measured_ratio <= 1 + epsilon_bound
};

// Exact integer ceil(a^(phi^i)), certified by interval evaluation with
// precision escalation; raises PrecisionError instead of guessing.
BigInt ceil_power(int a, int i, int precision);

// Materializes T(a, R) (params.k must be 1). Vertex 0 is the root, then
// levels R-1 down to 0 in order. Throws MaterializeCapExceeded when the
// vertex count exceeds the cap; use analytic_report instead.
Graph build_tree(const ExtremalParams& params, long long materialize_cap = 10'000'000);

LevelProfile level_profile(const ExtremalParams& params, int precision = 50,
                           EvalMode mode = EvalMode::Auto);

// Exact per-level sums of both sides (not the paper-style bounds): LHS as a
// big integer, RHS at `precision` digits, both in linear and log10 form when
// exact evaluation is possible; log-sum-exp accumulation over levels
// otherwise. The lemma conclusion is verified with certified intervals.
TightnessReport analytic_report(const ExtremalParams& params, int precision = 50,
                                EvalMode mode = EvalMode::Auto);

// Each vertex becomes a stable set of k vertices (copies v*k..v*k+k-1);
// each edge becomes K_{k,k}. Degrees scale by k, edges by k^2.
Graph blow_up(const Graph& g, int k);

// Orientation of blow_up(base graph, k) following the base orientation:
// every copy of a tail points at every copy of the corresponding head.
Orientation inherit_orientation(const Orientation& base, const Graph& blown, int k);

double epsilon_bound(int a, int R);
IReal epsilon_bound_iv(int a, int R, int digits);

// Smallest a >= 4 then smallest R >= 2 giving epsilon_bound(a, R) <= epsilon,
// splitting the budget evenly: e^(3/a) and 1 + 1/(R-1) each get sqrt(1+eps).
ExtremalParams choose_params(double epsilon);

}  // namespace phigraph
