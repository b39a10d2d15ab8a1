#pragma once

#include "phigraph/bigint.hpp"
#include "phigraph/fixed.hpp"
#include "phigraph/graph.hpp"
#include "phigraph/orient.hpp"
#include "phigraph/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace phigraph {

constexpr int kDefaultPrecision = 50;

// Both sides of the main inequality sum_{uv in E} d(u)d(v) <=
// k^(2-phi) sum_v d(v)^(phi^2). The LHS is an exact integer; the RHS is
// evaluated in decimal fixed point at `precision` digits. `holds` allows
// 1e-9 relative slack on top of the RHS so rounding can never flag a true
// inequality as violated.
struct InequalityReport {
    int n = 0;
    int m = 0;
    int k = 1;
    BigInt lhs;
    Fixed rhs;
    double ratio = 0.0;
    bool holds = false;
    int precision = kDefaultPrecision;
    std::optional<bool> hypothesis_verified;  // set by callers that ran mad()
};

// Weighted AM-GM x^p y^q <= px + qy. Returns (x^p y^q, px + qy). Requires
// x, y > 0 and p + q = 1 within 1e-20.
std::pair<Fixed, Fixed> weighted_amgm(const Fixed& x, const Fixed& y, const Fixed& p,
                                      const Fixed& q, int precision = kDefaultPrecision);

// sum over edges of d(u)*d(v), exact.
BigInt edge_product_sum(const Graph& g);

// sum over vertices of d(v)^beta with 0^beta = 0; beta > 0.
Fixed degree_power_sum(const Graph& g, const Fixed& beta, int precision = kDefaultPrecision);

// Eq. with cubed exponent: lhs <= (1/2) sum d^3, both sides exact; equality
// holds for every regular graph.
struct CubedBoundReport {
    int n = 0;
    int m = 0;
    BigInt lhs;
    Rational rhs;
    bool holds = false;
    bool equality = false;
};

CubedBoundReport check_cubed_bound(const Graph& g);

InequalityReport check_main(const Graph& g, int k, int precision = kDefaultPrecision);

// Per-arc certificate mirroring the proof: for each arc u->v,
//   k^(phi-2) d(u) d(v) <= phi^-2 k^-1 d(u)^(phi^2) + phi^-1 d(v)^phi.
// Aggregate lhs reproduces k^(phi-2) * edge_product_sum; aggregate rhs is
// at most sum_v d(v)^(phi^2).
struct ArcRecord {
    int tail = 0;
    int head = 0;
    Fixed lhs_term;
    Fixed rhs_term;
    bool holds = false;
};

struct ArcCertificate {
    int k = 1;
    int precision = kDefaultPrecision;
    std::vector<ArcRecord> arcs;
    Fixed lhs_sum;
    Fixed rhs_sum;
    BigInt edge_product;
    Fixed degree_power;
    bool all_hold = false;
    bool lhs_consistent = false;  // lhs_sum / k^(phi-2) == edge_product (1e-9 rel)
    bool rhs_bounded = false;     // rhs_sum <= degree_power (1e-9 rel slack)
};

ArcCertificate arc_certificate(const Graph& g, const Orientation& o, int k,
                               int precision = kDefaultPrecision);

}  // namespace phigraph
