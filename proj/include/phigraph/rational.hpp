#pragma once

#include "phigraph/bigint.hpp"
#include "phigraph/fixed.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace phigraph {

// Exact rational on arbitrary-precision integers; always reduced, den > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }
    explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    explicit Rational(long long value) : num_(value), den_(1) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }
    Rational operator-() const { return Rational(-num_, den_, no_normalize{}); }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    std::string str() const { return num_.str() + "/" + den_.str(); }

    std::string decimal_str(int decimals) const {
        return Fixed::from_mantissa(div_round(num_ * pow10(decimals), den_, Rounding::Nearest),
                                    decimals)
            .str();
    }

    Fixed to_fixed(int digits) const {
        return Fixed::from_mantissa(div_round(num_ * pow10(digits), den_, Rounding::Nearest),
                                    digits);
    }

    double to_double() const { return to_fixed(40).to_double(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    struct no_normalize {};
    Rational(BigInt num, BigInt den, no_normalize) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace phigraph
