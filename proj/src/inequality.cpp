#include "phigraph/inequality.hpp"

#include "phigraph/golden.hpp"

#include <map>
#include <stdexcept>

namespace phigraph {

namespace {

Fixed relative_slack(const Fixed& value) {
    // value * 1e-9, rounded up.
    return Fixed::from_mantissa(
        div_round(value.mantissa(), pow10(9), Rounding::Up), value.digits());
}

// d^beta for small integer degrees repeats constantly across a run; memoize
// per (degree, beta mantissa scale marker, precision).
class PowerCache {
public:
    PowerCache(const Fixed& beta, int precision) : beta_(beta), precision_(precision) {}

    const Fixed& get(int degree) {
        auto it = cache_.find(degree);
        if (it != cache_.end()) return it->second;
        Fixed v = pow_fixed(Fixed::from_integer(degree, precision_), beta_, precision_);
        return cache_.emplace(degree, std::move(v)).first->second;
    }

private:
    Fixed beta_;
    int precision_;
    std::map<int, Fixed> cache_;
};

}  // namespace

std::pair<Fixed, Fixed> weighted_amgm(const Fixed& x, const Fixed& y, const Fixed& p,
                                      const Fixed& q, int precision) {
    if (x.sign() <= 0 || y.sign() <= 0)
        throw std::domain_error("weighted_amgm: x and y must be positive");
    Fixed weight_gap = (p + q - Fixed::from_integer(1, precision)).abs();
    if (weight_gap > Fixed::from_mantissa(1, 20).rescaled(std::max(20, weight_gap.digits())))
        throw std::domain_error("weighted_amgm: weights must satisfy p + q = 1");
    Fixed lhs = pow_fixed(x, p, precision).mul(pow_fixed(y, q, precision));
    Fixed rhs = p.mul(x) + q.mul(y);
    return {lhs.rescaled(precision), rhs.rescaled(precision)};
}

BigInt edge_product_sum(const Graph& g) {
    BigInt total = 0;
    for (const auto& [u, v] : g.edges())
        total += BigInt(g.degree(u)) * g.degree(v);
    return total;
}

Fixed degree_power_sum(const Graph& g, const Fixed& beta, int precision) {
    if (beta.sign() <= 0) throw std::domain_error("degree_power_sum: beta must be positive");
    PowerCache cache(beta.rescaled(precision), precision);
    Fixed total = Fixed::from_integer(0, precision);
    // Degree-0 vertices contribute 0 (0^beta = 0); group by degree.
    std::map<int, int> degree_counts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) ++degree_counts[g.degree(v)];
    for (const auto& [d, count] : degree_counts)
        total = total + cache.get(d).mul_int(count);
    return total;
}

CubedBoundReport check_cubed_bound(const Graph& g) {
    CubedBoundReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.lhs = edge_product_sum(g);
    BigInt cubes = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        BigInt d(g.degree(v));
        cubes += d * d * d;
    }
    report.rhs = Rational(cubes, BigInt(2));
    Rational lhs_rat{report.lhs};
    report.holds = lhs_rat <= report.rhs;
    report.equality = lhs_rat == report.rhs;
    return report;
}

InequalityReport check_main(const Graph& g, int k, int precision) {
    if (k < 1) throw std::invalid_argument("check_main: k must be >= 1");
    InequalityReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.k = k;
    report.precision = precision;
    report.lhs = edge_product_sum(g);

    GoldenConstants c = golden_constants(precision);
    Fixed power_sum = degree_power_sum(g, c.phi_sq, precision);
    Fixed scale = pow_fixed(Fixed::from_integer(k, precision), c.inv_phi_sq, precision);
    report.rhs = scale.mul(power_sum).rescaled(precision);

    Fixed lhs_fixed = Fixed::from_integer(report.lhs, precision);
    report.holds = lhs_fixed <= report.rhs + relative_slack(report.rhs);
    report.ratio = report.rhs.is_zero() ? (report.lhs == 0 ? 0.0 : 1.0 / 0.0)
                                        : lhs_fixed.div(report.rhs).to_double();
    return report;
}

ArcCertificate arc_certificate(const Graph& g, const Orientation& o, int k, int precision) {
    if (o.host != &g) throw std::invalid_argument("arc_certificate: orientation host mismatch");
    if (!verify_orientation(o, k))
        throw std::invalid_argument("arc_certificate: orientation violates outdegree bound");

    GoldenConstants c = golden_constants(precision);
    Fixed k_fixed = Fixed::from_integer(k, precision);
    // k^(phi-2) = 1 / k^(2-phi)
    Fixed k_pow = pow_fixed(k_fixed, c.inv_phi_sq, precision);
    Fixed k_neg_pow = Fixed::from_integer(1, precision).div(k_pow);
    Fixed inv_k = Fixed::from_integer(1, precision).div(k_fixed);

    PowerCache phi_sq_pow(c.phi_sq, precision);
    PowerCache phi_pow(c.phi, precision);

    ArcCertificate cert;
    cert.k = k;
    cert.precision = precision;
    cert.arcs.reserve(g.edge_count());
    Fixed lhs_sum = Fixed::from_integer(0, precision);
    Fixed rhs_sum = Fixed::from_integer(0, precision);
    cert.all_hold = true;

    for (int e = 0; e < g.edge_count(); ++e) {
        ArcRecord rec;
        rec.tail = o.tail(e);
        rec.head = o.head(e);
        BigInt product = BigInt(g.degree(rec.tail)) * g.degree(rec.head);
        rec.lhs_term = k_neg_pow.mul_int(product);
        rec.rhs_term = c.inv_phi_sq.mul(inv_k).mul(phi_sq_pow.get(g.degree(rec.tail))) +
                       c.inv_phi.mul(phi_pow.get(g.degree(rec.head)));
        rec.rhs_term = rec.rhs_term.rescaled(precision);
        rec.holds = rec.lhs_term <= rec.rhs_term + relative_slack(rec.rhs_term);
        cert.all_hold = cert.all_hold && rec.holds;
        lhs_sum = lhs_sum + rec.lhs_term;
        rhs_sum = rhs_sum + rec.rhs_term;
        cert.arcs.push_back(std::move(rec));
    }

    cert.lhs_sum = lhs_sum;
    cert.rhs_sum = rhs_sum;
    cert.edge_product = edge_product_sum(g);
    cert.degree_power = degree_power_sum(g, c.phi_sq, precision);

    Fixed recovered = lhs_sum.mul(k_pow).rescaled(precision);
    Fixed target = Fixed::from_integer(cert.edge_product, precision);
    cert.lhs_consistent = (recovered - target).abs() <= relative_slack(target + Fixed::from_integer(1, precision));
    cert.rhs_bounded = rhs_sum <= cert.degree_power + relative_slack(cert.degree_power);
    return cert;
}

}  // namespace phigraph
