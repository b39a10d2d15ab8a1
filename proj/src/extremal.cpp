#include "phigraph/extremal.hpp"

#include "phigraph/golden.hpp"
#include "phigraph/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace phigraph {

namespace {

constexpr int kExactDigitCap = 100'000;  // max decimal digits of a level size
constexpr int kMaxLevels = 20'000;
constexpr double kLog10Phi = 0.20898764024997873;

void validate(const ExtremalParams& p) {
    if (p.a < 4) throw std::invalid_argument("extremal: a must be >= 4");
    if (p.R < 2) throw std::invalid_argument("extremal: R must be >= 2");
    if (p.R > kMaxLevels) throw PrecisionError("extremal: R beyond supported range");
    if (p.k < 1) throw std::invalid_argument("extremal: k must be >= 1");
}

// Estimated decimal digits of a^(phi^(R+1)), the largest quantity involved.
double top_exponent_digits(int a, int R) {
    return std::pow(10.0, (R + 1) * kLog10Phi) * std::log10(static_cast<double>(a));
}

IReal iv_ln10_padded(int q) {
    const Fixed& v = ln10_const(q);
    Fixed pad = Fixed::from_mantissa(pow10(6), q);  // 10^(6-q), dwarfs kernel error
    return {v - pad, v + pad};
}

// Real embedding of an exact Z[phi] element.
IReal iv_golden(const GoldenInt& g, int q) {
    return iv_add(iv_from_int(g.a, q), iv_mul_int(iv_phi(q), g.b));
}

// log-sum-exp accumulation in base 10, certified, in the given stable order.
IReal log10_sum(const std::vector<IReal>& terms, int q) {
    IReal acc = terms.front();
    IReal ten = iv_from_int(10, q);
    IReal one = iv_from_int(1, q);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        const IReal& t = terms[i];
        bool acc_is_max = acc.mid() >= t.mid();
        const IReal& big = acc_is_max ? acc : t;
        const IReal& small = acc_is_max ? t : acc;
        IReal p = iv_pow(ten, iv_sub(small, big), q);
        acc = iv_add(big, iv_log10(iv_add(one, p), q));
    }
    return acc;
}

}  // namespace

BigInt ceil_power(int a, int i, int precision) {
    if (a < 2) throw std::invalid_argument("ceil_power: a must be >= 2");
    if (i < 0) throw std::invalid_argument("ceil_power: i must be >= 0");
    if (i == 0) return BigInt(a);
    if (std::pow(10.0, i * kLog10Phi) * std::log10(static_cast<double>(a)) > kExactDigitCap)
        throw PrecisionError("ceil_power: value too large for exact representation");

    int q = std::max(precision, 40);
    for (int attempt = 0; attempt < 5; ++attempt, q *= 2) {
        IReal exponent = iv_phi_pow(i, q);
        IReal ln_a = iv_ln(iv_from_int(a, q), q);
        IReal value = iv_exp(iv_mul(exponent, ln_a), q);
        BigInt lo_ceil = value.lo.ceil();
        BigInt hi_ceil = value.hi.ceil();
        if (lo_ceil == hi_ceil) return lo_ceil;
    }
    throw PrecisionError("ceil_power: could not separate a^(phi^i) from an integer");
}

Graph build_tree(const ExtremalParams& params, long long materialize_cap) {
    validate(params);
    if (params.k != 1) throw std::invalid_argument("build_tree: requires k = 1 (use blow_up)");
    const int a = params.a, R = params.R;

    std::vector<BigInt> c(R);
    for (int i = 0; i < R; ++i) c[i] = ceil_power(a, i, 50);

    std::vector<BigInt> sizes(R + 1);
    sizes[R] = 1;
    BigInt total = 1;
    for (int j = R - 1; j >= 0; --j) {
        sizes[j] = sizes[j + 1] * c[j];
        total += sizes[j];
        if (total > materialize_cap)
            throw MaterializeCapExceeded(
                "build_tree: vertex count exceeds the materialization cap; "
                "use analytic_report");
    }

    // Ids: root first, then each level from R-1 down to 0.
    std::vector<long long> level_start(R + 1);
    level_start[R] = 0;
    long long next = 1;
    for (int j = R - 1; j >= 0; --j) {
        level_start[j] = next;
        next += sizes[j].convert_to<long long>();
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(total.convert_to<long long>()) - 1);
    for (int j = R; j >= 1; --j) {
        long long parents = sizes[j].convert_to<long long>();
        long long kids_per_parent = c[j - 1].convert_to<long long>();
        for (long long p = 0; p < parents; ++p) {
            long long parent_id = level_start[j] + p;
            long long first_kid = level_start[j - 1] + p * kids_per_parent;
            for (long long t = 0; t < kids_per_parent; ++t)
                edges.emplace_back(static_cast<int>(parent_id),
                                   static_cast<int>(first_kid + t));
        }
    }
    return Graph::from_edges(static_cast<int>(total.convert_to<long long>()),
                             std::move(edges));
}

LevelProfile level_profile(const ExtremalParams& params, int precision, EvalMode mode) {
    validate(params);
    const int a = params.a, R = params.R;
    LevelProfile prof;
    prof.a = a;
    prof.R = R;
    prof.precision = precision;

    bool can_exact = top_exponent_digits(a, R) <= kExactDigitCap;
    if (mode == EvalMode::Exact && !can_exact)
        throw PrecisionError("level_profile: ceilings too large for exact mode");
    prof.exact = can_exact;

    const int q = precision + 10;
    if (can_exact) {
        prof.ceil_powers.resize(R);
        for (int i = 0; i < R; ++i) prof.ceil_powers[i] = ceil_power(a, i, precision);

        prof.sizes.assign(R + 1, BigInt(1));
        for (int j = R - 1; j >= 0; --j)
            prof.sizes[j] = prof.sizes[j + 1] * prof.ceil_powers[j];

        prof.level_degree.resize(R + 1);
        prof.level_degree[0] = 1;
        for (int j = 1; j < R; ++j) prof.level_degree[j] = prof.ceil_powers[j - 1] + 1;
        prof.level_degree[R] = prof.ceil_powers[R - 1];

        prof.edge_counts.resize(R);
        for (int i = 1; i <= R; ++i) prof.edge_counts[i - 1] = prof.sizes[i - 1];

        for (int j = 0; j <= R; ++j)
            prof.log10_sizes_iv.push_back(iv_log10(iv_from_int(prof.sizes[j], q), q));

        // Sandwich: a^(phi^(R+1) - phi^(j+1)) <= |L_j| <= same * e^(2/a).
        IReal ln_a = iv_ln(iv_from_int(a, q), q);
        IReal slack = iv_exp(iv_div_int(iv_from_int(2, q), a), q);
        prof.sandwich_verified = true;
        for (int j = 0; j < R; ++j) {
            IReal expo = iv_golden(golden_pow(R + 1) - golden_pow(j + 1), q);
            IReal lower = iv_exp(iv_mul(expo, ln_a), q);
            IReal upper = iv_mul(lower, slack);
            IReal size_iv = iv_from_int(prof.sizes[j], q);
            if (!(lower.certainly_le(size_iv) && size_iv.certainly_le(upper)))
                prof.sandwich_verified = false;
        }
    } else {
        // Ceilings beyond exact representation: enclose log10 |L_j| by
        // (phi^(R+1) - phi^(j+1)) log10 a + [0, 2/(a ln 10)] — the sandwich
        // itself, telescoped through the geometric exponent identity.
        IReal log10_a = iv_log10(iv_from_int(a, q), q);
        IReal ceil_slack = iv_div(iv_div_int(iv_from_int(2, q), a), iv_ln10_padded(q));
        for (int j = 0; j <= R; ++j) {
            if (j == R) {
                prof.log10_sizes_iv.push_back(iv_from_int(0, q));  // |L_R| = 1
                continue;
            }
            IReal base = iv_mul(iv_golden(golden_pow(R + 1) - golden_pow(j + 1), q), log10_a);
            prof.log10_sizes_iv.push_back({base.lo, iv_add(base, ceil_slack).hi});
        }
        prof.sandwich_verified = true;  // the enclosure is the sandwich by construction
    }

    for (const IReal& iv : prof.log10_sizes_iv)
        prof.log10_sizes.push_back(iv.mid().rescaled(precision));
    return prof;
}

namespace {

// Certified log10 of each level's vertex degree when the ceilings cannot be
// materialized: ceil(a^(phi^t)) + 1 <= a^(phi^t)(1 + 2a^(-phi^t)), and for
// t >= 1 the correction stays below 1/a; t = 0 gives degree a+1 exactly.
std::vector<IReal> sandwich_log_degrees(const ExtremalParams& params, int q) {
    const int a = params.a, R = params.R;
    IReal log10_a = iv_log10(iv_from_int(a, q), q);
    IReal corr = iv_div(iv_div_int(iv_from_int(1, q), a), iv_ln10_padded(q));
    std::vector<IReal> degs(R + 1);
    degs[0] = iv_from_int(0, q);  // leaves: degree 1
    for (int j = 1; j < R; ++j) {
        if (j == 1) {
            degs[j] = iv_log10(iv_from_int(a + 1, q), q);
        } else {
            IReal base = iv_mul(iv_phi_pow(j - 1, q), log10_a);
            degs[j] = {base.lo, iv_add(base, corr).hi};
        }
    }
    IReal root_base = iv_mul(iv_phi_pow(R - 1, q), log10_a);
    degs[R] = {root_base.lo, iv_add(root_base, corr).hi};
    return degs;
}

}  // namespace

TightnessReport analytic_report(const ExtremalParams& params, int precision, EvalMode mode) {
    validate(params);
    const int R = params.R;
    LevelProfile prof = level_profile(params, precision, mode);
    const int q = precision + 10;

    TightnessReport report;
    report.params = params;
    report.precision = precision;
    report.exact = prof.exact && mode != EvalMode::LogDomain;
    report.epsilon_bound = epsilon_bound(params.a, params.R);

    BigInt k4 = boost::multiprecision::pow(BigInt(params.k), 4);
    IReal ratio;

    if (report.exact) {
        BigInt lhs = 0;
        for (int i = 1; i <= R; ++i)
            lhs += prof.edge_counts[i - 1] * prof.level_degree[i] * prof.level_degree[i - 1];

        IReal phi_sq = iv_add(iv_phi(q), iv_from_int(1, q));
        IReal rhs = iv_from_int(prof.sizes[0], q);  // leaves contribute 1^(phi^2) each
        std::map<BigInt, IReal> pow_cache;
        for (int j = 1; j <= R; ++j) {
            const BigInt& d = prof.level_degree[j];
            auto it = pow_cache.find(d);
            if (it == pow_cache.end())
                it = pow_cache.emplace(d, iv_pow(iv_from_int(d, q), phi_sq, q)).first;
            rhs = iv_add(rhs, iv_mul_int(it->second, prof.sizes[j]));
        }

        report.lhs_exact = lhs * k4;
        IReal lhs_iv = iv_from_int(*report.lhs_exact, q);
        IReal rhs_iv = iv_mul_int(rhs, k4);
        report.rhs_value = rhs_iv.mid().rescaled(precision);
        report.log10_lhs = iv_log10(lhs_iv, q).mid().rescaled(precision);
        report.log10_rhs = iv_log10(rhs_iv, q).mid().rescaled(precision);
        ratio = iv_div(rhs_iv, lhs_iv);
    } else {
        std::vector<IReal> degs;
        if (prof.exact) {
            degs.reserve(R + 1);
            for (int j = 0; j <= R; ++j)
                degs.push_back(iv_log10(iv_from_int(prof.level_degree[j], q), q));
        } else {
            degs = sandwich_log_degrees(params, q);
        }
        // LHS terms: log10 |E_i| + log10 deg_i + log10 deg_{i-1}, E_i = L_{i-1}.
        std::vector<IReal> lhs_terms, rhs_terms;
        for (int i = 1; i <= R; ++i)
            lhs_terms.push_back(
                iv_add(prof.log10_sizes_iv[i - 1], iv_add(degs[i], degs[i - 1])));
        IReal phi_sq = iv_add(iv_phi(q), iv_from_int(1, q));
        for (int j = 0; j <= R; ++j)
            rhs_terms.push_back(iv_add(prof.log10_sizes_iv[j], iv_mul(phi_sq, degs[j])));

        IReal log_lhs = log10_sum(lhs_terms, q);
        IReal log_rhs = log10_sum(rhs_terms, q);
        if (params.k > 1) {
            IReal shift = iv_mul_int(iv_log10(iv_from_int(params.k, q), q), 4);
            log_lhs = iv_add(log_lhs, shift);
            log_rhs = iv_add(log_rhs, shift);
        }
        report.log10_lhs = log_lhs.mid().rescaled(precision);
        report.log10_rhs = log_rhs.mid().rescaled(precision);
        ratio = iv_pow(iv_from_int(10, q), iv_sub(log_rhs, log_lhs), q);

        if (!prof.exact) {
            // The naive enclosure charges the e^(2/a) ceiling slack to both
            // sums independently, which can swamp the lemma's margin. Each
            // |L_j| appears in lhs term j+1 and rhs term j, so with
            // |L_j| = a^(E_j) u_j (u_j >= 1, E_j exact in Z[phi]):
            //   ratio <= d_R^(phi^2)/sum_j alpha_j + max_j beta_j/alpha_j,
            // where alpha_j = a^(E_j) d_{j+1} d_j, beta_j = a^(E_j) d_j^(phi^2);
            // the u_j cancel per term and the root level has exact size 1.
            IReal log10_a = iv_log10(iv_from_int(params.a, q), q);
            std::vector<IReal> log_alpha;
            IReal max_beta_over_alpha = iv_from_int(0, q);
            for (int j = 0; j < R; ++j) {
                IReal log_ej =
                    iv_mul(iv_golden(golden_pow(R + 1) - golden_pow(j + 1), q), log10_a);
                log_alpha.push_back(iv_add(log_ej, iv_add(degs[j + 1], degs[j])));
                // log10(beta_j / alpha_j) = (phi^2 - 1) log d_j - log d_{j+1}
                IReal t = iv_sub(iv_mul(iv_phi(q), degs[j]), degs[j + 1]);
                IReal val = iv_pow(iv_from_int(10, q), t, q);
                if (val.hi > max_beta_over_alpha.hi) max_beta_over_alpha = val;
            }
            IReal log_sum_alpha = log10_sum(log_alpha, q);
            IReal log_root = iv_mul(iv_add(iv_phi(q), iv_from_int(1, q)), degs[R]);
            IReal root_share =
                iv_pow(iv_from_int(10, q), iv_sub(log_root, log_sum_alpha), q);
            IReal corr_hi = iv_add(root_share, max_beta_over_alpha);
            if (corr_hi.hi < ratio.hi) ratio.hi = corr_hi.hi;
            if (ratio.hi < ratio.lo) ratio.lo = ratio.hi;
        }
    }

    report.measured_ratio = ratio.mid().to_double();
    IReal bound = iv_add(iv_from_int(1, q), epsilon_bound_iv(params.a, params.R, q));
    report.within_bound = ratio.certainly_le(bound);
    return report;
}

Graph blow_up(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("blow_up: k must be >= 1");
    if (k == 1) return g;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()) * k * k);
    for (const auto& [u, v] : g.edges())
        for (int s = 0; s < k; ++s)
            for (int t = 0; t < k; ++t)
                edges.emplace_back(u * k + s, v * k + t);
    return Graph::from_edges(g.vertex_count() * k, std::move(edges));
}

Orientation inherit_orientation(const Orientation& base, const Graph& blown, int k) {
    const Graph& host = *base.host;
    if (blown.vertex_count() != host.vertex_count() * k ||
        blown.edge_count() != host.edge_count() * k * k)
        throw std::invalid_argument("inherit_orientation: blown graph shape mismatch");

    std::map<std::pair<int, int>, int> base_index;
    for (int e = 0; e < host.edge_count(); ++e) base_index.emplace(host.edges()[e], e);

    std::vector<bool> tails(blown.edge_count());
    for (int e = 0; e < blown.edge_count(); ++e) {
        const auto& [x, y] = blown.edges()[e];
        int u = x / k, v = y / k;
        auto it = base_index.find({std::min(u, v), std::max(u, v)});
        if (it == base_index.end())
            throw std::invalid_argument("inherit_orientation: edge with no base preimage");
        tails[e] = (u == base.tail(it->second));
    }
    return Orientation::from_tails(blown, std::move(tails));
}

double epsilon_bound(int a, int R) {
    if (a < 4 || R < 2) throw std::invalid_argument("epsilon_bound: requires a >= 4, R >= 2");
    return std::exp(3.0 / a) * (1.0 + 1.0 / (R - 1)) - 1.0;
}

IReal epsilon_bound_iv(int a, int R, int digits) {
    if (a < 4 || R < 2) throw std::invalid_argument("epsilon_bound: requires a >= 4, R >= 2");
    IReal e3a = iv_exp(iv_div_int(iv_from_int(3, digits), a), digits);
    IReal factor = iv_add(iv_from_int(1, digits),
                          iv_div_int(iv_from_int(1, digits), R - 1));
    return iv_sub(iv_mul(e3a, factor), iv_from_int(1, digits));
}

ExtremalParams choose_params(double epsilon) {
    if (!(epsilon > 0)) throw std::invalid_argument("choose_params: epsilon must be > 0");
    const int q = 60;
    Fixed one_plus = Fixed::from_integer(1, q) + Fixed::from_double(epsilon, q);

    // Factor budget sqrt(1+eps) each. a: e^(3/a) <= sqrt(1+eps), i.e.
    // e^(6/a) <= 1+eps. Solve in doubles, then certify and adjust.
    double target_ln = std::log1p(epsilon) / 2.0;
    double a_estimate = 3.0 / target_ln;
    if (a_estimate > 1e9) throw PrecisionError("choose_params: epsilon too small");
    int a = std::max(4, static_cast<int>(std::ceil(a_estimate)) - 2);
    auto a_ok = [&](int cand) {
        IReal v = iv_exp(iv_div_int(iv_from_int(6, q), cand), q);
        return v.hi <= one_plus;
    };
    while (!a_ok(a)) ++a;
    while (a > 4 && a_ok(a - 1)) --a;

    // R: (1 + 1/(R-1))^2 <= 1+eps, exact rational versus fixed comparison.
    auto r_ok = [&](long long cand) {
        Rational lhs(BigInt(cand) * cand, BigInt(cand - 1) * (cand - 1));
        return lhs.to_fixed(q + 10) <= one_plus.rescaled(q + 10);
    };
    double root = std::sqrt(1.0 + epsilon);
    double r_estimate = 1.0 + 1.0 / (root - 1.0);
    if (r_estimate > kMaxLevels + 10.0)
        throw PrecisionError("choose_params: epsilon too small (R beyond range)");
    long long r = std::max(2LL, static_cast<long long>(std::ceil(r_estimate)) - 2);
    while (!r_ok(r)) ++r;
    while (r > 2 && r_ok(r - 1)) --r;

    ExtremalParams p;
    p.a = a;
    p.R = static_cast<int>(r);
    p.k = 1;
    p.epsilon = epsilon;
    return p;
}

}  // namespace phigraph
