#include "phigraph/golden.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace phigraph {

std::ostream& operator<<(std::ostream& os, const GoldenInt& g) {
    return os << g.a << (g.b >= 0 ? "+" : "") << g.b << "*phi";
}

namespace {
// Returns (F(n), F(n+1)).
std::pair<BigInt, BigInt> fib_pair(long long n) {
    if (n == 0) return {0, 1};
    auto [a, b] = fib_pair(n >> 1);
    BigInt c = a * (2 * b - a);
    BigInt d = a * a + b * b;
    if (n & 1) return {d, c + d};
    return {c, d};
}
}  // namespace

BigInt fibonacci(long long n) {
    if (n < 0) throw std::domain_error("fibonacci: negative index");
    return fib_pair(n).first;
}

GoldenInt golden_pow(long long n) {
    if (n < 0) throw std::domain_error("golden_pow: negative exponent");
    if (n == 0) return {1, 0};
    auto [fn, fn1] = fib_pair(n);  // F(n), F(n+1)
    return {fn1 - fn, fn};         // F(n-1) = F(n+1) - F(n)
}

bool geometric_sum_check(long long R, long long i) {
    if (R < 1 || i < 1 || i > R)
        throw std::domain_error("geometric_sum_check: requires 1 <= i <= R");
    GoldenInt sum;
    for (long long j = i - 1; j <= R - 1; ++j) sum = sum + golden_pow(j);
    return sum == golden_pow(R + 1) - golden_pow(i);
}

GoldenConstants golden_constants(int precision) {
    if (precision < 30)
        throw std::invalid_argument("golden_constants: precision must be >= 30");
    BigInt s = isqrt(BigInt(5) * pow10(2 * precision));
    Fixed sqrt5 = Fixed::from_mantissa(s, precision);
    Fixed one = Fixed::from_integer(1, precision);
    Fixed phi = (one + sqrt5).div_int(2);
    GoldenConstants c;
    c.precision = precision;
    c.phi = phi;
    c.phi_sq = phi.mul(phi);
    c.inv_phi = phi - one;
    c.inv_phi_sq = Fixed::from_integer(2, precision) - phi;
    return c;
}

Fixed golden_to_real(const GoldenInt& g, int digits) {
    GoldenConstants c = golden_constants(std::max(digits, 30));
    return (Fixed::from_integer(g.a, digits) + c.phi.mul_int(g.b).rescaled(digits));
}

}  // namespace phigraph
