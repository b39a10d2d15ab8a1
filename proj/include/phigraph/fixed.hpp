#pragma once

#include "phigraph/bigint.hpp"

#include <string>

namespace phigraph {

// Decimal fixed-point real: value = mantissa / 10^digits. Arbitrary integer
// part, `digits` fractional decimal digits. Addition, subtraction and
// comparison are exact (operands are aligned by exact upscaling); mul/div
// round per mode with error at most one ulp in the result scale.
class Fixed {
public:
    Fixed() : mant_(0), digits_(0) {}

    static Fixed from_mantissa(BigInt mant, int digits);
    static Fixed from_integer(const BigInt& value, int digits);
    static Fixed from_string(const std::string& decimal, int digits);
    static Fixed from_double(double value, int digits);  // dyadic expansion, 20 spare digits

    int digits() const { return digits_; }
    const BigInt& mantissa() const { return mant_; }
    bool is_zero() const { return mant_ == 0; }
    int sign() const { return mant_ == 0 ? 0 : (mant_ < 0 ? -1 : 1); }

    // Exact when target >= digits(); rounds otherwise.
    Fixed rescaled(int digits, Rounding mode = Rounding::Nearest) const;

    Fixed operator-() const { return Fixed(-mant_, digits_); }
    friend Fixed operator+(const Fixed& x, const Fixed& y);
    friend Fixed operator-(const Fixed& x, const Fixed& y);

    Fixed mul(const Fixed& other, Rounding mode = Rounding::Nearest) const;
    Fixed div(const Fixed& other, Rounding mode = Rounding::Nearest) const;
    Fixed mul_int(const BigInt& k) const;                 // exact
    Fixed div_int(const BigInt& k, Rounding mode = Rounding::Nearest) const;
    Fixed mul_pow2(long long e, Rounding mode = Rounding::Nearest) const;

    Fixed abs() const { return Fixed(boost::multiprecision::abs(mant_), digits_); }

    BigInt floor() const { return div_round(mant_, pow10(digits_), Rounding::Down); }
    BigInt ceil() const { return div_round(mant_, pow10(digits_), Rounding::Up); }
    BigInt round() const { return div_round(mant_, pow10(digits_), Rounding::Nearest); }

    int compare(const Fixed& other) const;  // exact
    friend bool operator==(const Fixed& x, const Fixed& y) { return x.compare(y) == 0; }
    friend bool operator!=(const Fixed& x, const Fixed& y) { return x.compare(y) != 0; }
    friend bool operator<(const Fixed& x, const Fixed& y) { return x.compare(y) < 0; }
    friend bool operator<=(const Fixed& x, const Fixed& y) { return x.compare(y) <= 0; }
    friend bool operator>(const Fixed& x, const Fixed& y) { return x.compare(y) > 0; }
    friend bool operator>=(const Fixed& x, const Fixed& y) { return x.compare(y) >= 0; }

    // Fixed-width rendering: integer part, '.', exactly digits() decimals.
    std::string str() const;
    std::string str(int decimals) const;  // rounded to the requested decimals
    double to_double() const;

    Fixed ulp() const { return Fixed(1, digits_); }

private:
    Fixed(BigInt mant, int digits) : mant_(std::move(mant)), digits_(digits) {}

    BigInt mant_;
    int digits_;
};

// Transcendental kernels. Results carry `digits` fractional digits; the
// true error is far below one ulp of the result (24 internal guard digits,
// series truncated below the guard scale). The interval layer widens by
// 10^(6-digits) relative, leaving ~18 orders of magnitude of headroom.
Fixed exp_fixed(const Fixed& x, int digits);
Fixed ln_fixed(const Fixed& x, int digits);   // x > 0
Fixed pow_fixed(const Fixed& base, const Fixed& exponent, int digits);  // base > 0
Fixed log10_fixed(const Fixed& x, int digits);  // x > 0
Fixed sqrt_fixed(const Fixed& x, int digits, Rounding mode = Rounding::Nearest);

const Fixed& ln2_const(int digits);
const Fixed& ln10_const(int digits);

// log10 as a double (usable far beyond double range).
double log10_double(const Fixed& x);

}  // namespace phigraph
