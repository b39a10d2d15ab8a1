#pragma once

#include "phigraph/bigint.hpp"
#include "phigraph/fixed.hpp"

namespace phigraph {

// Closed interval [lo, hi] guaranteed to contain the exact real value.
// Ring operations use directed rounding on endpoints; transcendental
// endpoints are widened by 10^(6-digits) relative slack, far above the
// kernels' true error (see fixed.hpp).
struct IReal {
    Fixed lo, hi;

    int digits() const { return lo.digits(); }
    Fixed width() const { return hi - lo; }
    Fixed mid() const { return (lo + hi).div_int(2); }
    bool contains_integer() const { return lo.ceil() <= hi.floor(); }

    bool certainly_le(const IReal& other) const { return hi <= other.lo; }
    bool certainly_lt(const IReal& other) const { return hi < other.lo; }
    bool certainly_ge(const IReal& other) const { return lo >= other.hi; }
};

IReal iv_exact(const Fixed& v);
IReal iv_from_int(const BigInt& v, int digits);
IReal iv_point(const Fixed& v, int digits);  // rounds outward to `digits`

IReal iv_add(const IReal& x, const IReal& y);
IReal iv_sub(const IReal& x, const IReal& y);
IReal iv_mul(const IReal& x, const IReal& y);
IReal iv_mul_int(const IReal& x, const BigInt& k);
IReal iv_div(const IReal& x, const IReal& y);  // y strictly positive
IReal iv_div_int(const IReal& x, const BigInt& k);  // k > 0

IReal iv_exp(const IReal& x, int digits);
IReal iv_ln(const IReal& x, int digits);            // x strictly positive
IReal iv_pow(const IReal& base, const IReal& exponent, int digits);  // base > 0
IReal iv_log10(const IReal& x, int digits);

IReal iv_sqrt5(int digits);
IReal iv_phi(int digits);
IReal iv_phi_pow(long long n, int digits);  // phi^n = F(n-1) + F(n)*phi, n >= 0

}  // namespace phigraph
