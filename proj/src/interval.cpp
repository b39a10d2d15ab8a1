#include "phigraph/interval.hpp"

#include "phigraph/golden.hpp"

#include <algorithm>
#include <stdexcept>

namespace phigraph {

namespace {
constexpr int kSlackDigits = 6;

// Outward slack covering kernel error: (|v| + 1) * 10^(kSlackDigits - digits).
Fixed kernel_pad(const Fixed& v) {
    Fixed mag = v.abs() + Fixed::from_integer(1, v.digits());
    return Fixed::from_mantissa(
        div_round(mag.mantissa(), pow10(v.digits() - kSlackDigits), Rounding::Up) + 1,
        v.digits());
}
}  // namespace

IReal iv_exact(const Fixed& v) { return {v, v}; }

IReal iv_from_int(const BigInt& v, int digits) {
    Fixed f = Fixed::from_integer(v, digits);
    return {f, f};
}

IReal iv_point(const Fixed& v, int digits) {
    return {v.rescaled(digits, Rounding::Down), v.rescaled(digits, Rounding::Up)};
}

IReal iv_add(const IReal& x, const IReal& y) { return {x.lo + y.lo, x.hi + y.hi}; }

IReal iv_sub(const IReal& x, const IReal& y) { return {x.lo - y.hi, x.hi - y.lo}; }

IReal iv_mul(const IReal& x, const IReal& y) {
    Fixed cands_lo[4] = {x.lo.mul(y.lo, Rounding::Down), x.lo.mul(y.hi, Rounding::Down),
                         x.hi.mul(y.lo, Rounding::Down), x.hi.mul(y.hi, Rounding::Down)};
    Fixed cands_hi[4] = {x.lo.mul(y.lo, Rounding::Up), x.lo.mul(y.hi, Rounding::Up),
                         x.hi.mul(y.lo, Rounding::Up), x.hi.mul(y.hi, Rounding::Up)};
    Fixed lo = cands_lo[0], hi = cands_hi[0];
    for (int i = 1; i < 4; ++i) {
        if (cands_lo[i] < lo) lo = cands_lo[i];
        if (cands_hi[i] > hi) hi = cands_hi[i];
    }
    return {lo, hi};
}

IReal iv_mul_int(const IReal& x, const BigInt& k) {
    if (k >= 0) return {x.lo.mul_int(k), x.hi.mul_int(k)};
    return {x.hi.mul_int(k), x.lo.mul_int(k)};
}

IReal iv_div(const IReal& x, const IReal& y) {
    if (y.lo.sign() <= 0) throw std::domain_error("iv_div: divisor not strictly positive");
    if (x.lo.sign() >= 0) return {x.lo.div(y.hi, Rounding::Down), x.hi.div(y.lo, Rounding::Up)};
    if (x.hi.sign() <= 0) return {x.lo.div(y.lo, Rounding::Down), x.hi.div(y.hi, Rounding::Up)};
    return {x.lo.div(y.lo, Rounding::Down), x.hi.div(y.lo, Rounding::Up)};
}

IReal iv_div_int(const IReal& x, const BigInt& k) {
    if (k <= 0) throw std::domain_error("iv_div_int: divisor not strictly positive");
    return {x.lo.div_int(k, Rounding::Down), x.hi.div_int(k, Rounding::Up)};
}

IReal iv_exp(const IReal& x, int digits) {
    Fixed lo = exp_fixed(x.lo, digits);
    Fixed hi = exp_fixed(x.hi, digits);
    return {lo - kernel_pad(lo), hi + kernel_pad(hi)};
}

IReal iv_ln(const IReal& x, int digits) {
    if (x.lo.sign() <= 0) throw std::domain_error("iv_ln: argument not strictly positive");
    Fixed lo = ln_fixed(x.lo, digits);
    Fixed hi = ln_fixed(x.hi, digits);
    return {lo - kernel_pad(lo), hi + kernel_pad(hi)};
}

IReal iv_pow(const IReal& base, const IReal& exponent, int digits) {
    int work = digits + 8;
    IReal t = iv_mul(exponent, iv_ln(base, work));
    IReal r = iv_exp(t, work);
    return {r.lo.rescaled(digits, Rounding::Down), r.hi.rescaled(digits, Rounding::Up)};
}

IReal iv_log10(const IReal& x, int digits) {
    int work = digits + 8;
    IReal l = iv_ln(x, work);
    const Fixed& l10 = ln10_const(work);
    IReal l10iv{l10 - kernel_pad(l10), l10 + kernel_pad(l10)};
    IReal r = iv_div(l, l10iv);
    return {r.lo.rescaled(digits, Rounding::Down), r.hi.rescaled(digits, Rounding::Up)};
}

IReal iv_sqrt5(int digits) {
    // floor(sqrt(5*10^(2q))) is exact directed rounding: [s, s+1] encloses.
    BigInt s = isqrt(BigInt(5) * pow10(2 * digits));
    return {Fixed::from_mantissa(s, digits), Fixed::from_mantissa(s + 1, digits)};
}

IReal iv_phi(int digits) {
    IReal r5 = iv_sqrt5(digits);
    IReal one = iv_from_int(1, digits);
    return iv_div_int(iv_add(one, r5), 2);
}

IReal iv_phi_pow(long long n, int digits) {
    if (n < 0) throw std::domain_error("iv_phi_pow: negative exponent");
    BigInt fn1 = fibonacci(n == 0 ? 0 : n - 1);
    if (n == 0) fn1 = 1;  // F(-1) = 1
    BigInt fn = fibonacci(n);
    return iv_add(iv_from_int(fn1, digits), iv_mul_int(iv_phi(digits), fn));
}

}  // namespace phigraph
