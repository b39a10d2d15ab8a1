#pragma once

#include "phigraph/bigint.hpp"
#include "phigraph/fixed.hpp"

#include <iosfwd>

namespace phigraph {

// Element of Z[phi]: a + b*phi with integer a, b. Multiplication reduces
// by phi^2 = phi + 1.
struct GoldenInt {
    BigInt a;
    BigInt b;

    GoldenInt() : a(0), b(0) {}
    GoldenInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}

    friend GoldenInt operator+(const GoldenInt& x, const GoldenInt& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend GoldenInt operator-(const GoldenInt& x, const GoldenInt& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend GoldenInt operator*(const GoldenInt& x, const GoldenInt& y) {
        // (a+b phi)(c+d phi) = ac + (ad+bc) phi + bd phi^2 = (ac+bd) + (ad+bc+bd) phi
        return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    friend bool operator==(const GoldenInt& x, const GoldenInt& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const GoldenInt& x, const GoldenInt& y) { return !(x == y); }
};

std::ostream& operator<<(std::ostream& os, const GoldenInt& g);

// F(0)=0, F(1)=1; fast doubling.
BigInt fibonacci(long long n);

// phi^n = F(n-1) + F(n) phi, exactly.
GoldenInt golden_pow(long long n);

// Checks phi^(R-1) + ... + phi^(i-1) == phi^(R+1) - phi^i exactly in Z[phi].
bool geometric_sum_check(long long R, long long i);

struct GoldenConstants {
    int precision;
    Fixed phi;         // (1+sqrt 5)/2
    Fixed phi_sq;      // phi^2 = phi + 1
    Fixed inv_phi;     // phi^-1 = phi - 1
    Fixed inv_phi_sq;  // phi^-2 = 2 - phi
};

GoldenConstants golden_constants(int precision);

Fixed golden_to_real(const GoldenInt& g, int digits);

}  // namespace phigraph
