#include "phigraph/fixed.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace phigraph {

namespace {
constexpr int kGuardDigits = 24;
constexpr long long kMaxPow2Shift = 20'000'000;  // caps exp() argument blowup
}  // namespace

Fixed Fixed::from_mantissa(BigInt mant, int digits) {
    if (digits < 0) throw std::invalid_argument("Fixed: negative digit count");
    return Fixed(std::move(mant), digits);
}

Fixed Fixed::from_integer(const BigInt& value, int digits) {
    if (digits < 0) throw std::invalid_argument("Fixed: negative digit count");
    return Fixed(value * pow10(digits), digits);
}

Fixed Fixed::from_string(const std::string& decimal, int digits) {
    if (decimal.empty()) throw std::invalid_argument("Fixed: empty decimal string");
    std::size_t pos = 0;
    bool negative = false;
    if (decimal[pos] == '+' || decimal[pos] == '-') {
        negative = decimal[pos] == '-';
        ++pos;
    }
    std::string int_part, frac_part;
    bool seen_dot = false;
    for (; pos < decimal.size(); ++pos) {
        char c = decimal[pos];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("Fixed: malformed decimal");
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            (seen_dot ? frac_part : int_part) += c;
        } else {
            throw std::invalid_argument("Fixed: malformed decimal '" + decimal + "'");
        }
    }
    if (int_part.empty() && frac_part.empty())
        throw std::invalid_argument("Fixed: malformed decimal '" + decimal + "'");
    if (int_part.empty()) int_part = "0";
    BigInt mant(int_part);
    mant *= pow10(digits);
    if (!frac_part.empty()) {
        // frac/10^len scaled to `digits`: exact while len <= digits, rounded after.
        int len = static_cast<int>(frac_part.size());
        BigInt frac(frac_part);
        if (len <= digits) {
            mant += frac * pow10(digits - len);
        } else {
            mant += div_round(frac, pow10(len - digits), Rounding::Nearest);
        }
    }
    if (negative) mant = -mant;
    return Fixed(std::move(mant), digits);
}

Fixed Fixed::from_double(double value, int digits) {
    if (!std::isfinite(value)) throw std::invalid_argument("Fixed: non-finite double");
    int exp2;
    double frac = std::frexp(value, &exp2);
    // 53-bit mantissa: value = m * 2^(exp2-53) exactly.
    auto m = static_cast<long long>(std::ldexp(frac, 53));
    exp2 -= 53;
    Fixed base = Fixed::from_integer(BigInt(m), digits + 20);
    return base.mul_pow2(exp2, Rounding::Nearest).rescaled(digits);
}

Fixed Fixed::rescaled(int digits, Rounding mode) const {
    if (digits == digits_) return *this;
    if (digits > digits_) return Fixed(mant_ * pow10(digits - digits_), digits);
    return Fixed(div_round(mant_, pow10(digits_ - digits), mode), digits);
}

Fixed operator+(const Fixed& x, const Fixed& y) {
    int d = std::max(x.digits_, y.digits_);
    return Fixed(x.rescaled(d).mant_ + y.rescaled(d).mant_, d);
}

Fixed operator-(const Fixed& x, const Fixed& y) {
    int d = std::max(x.digits_, y.digits_);
    return Fixed(x.rescaled(d).mant_ - y.rescaled(d).mant_, d);
}

Fixed Fixed::mul(const Fixed& other, Rounding mode) const {
    int d = std::max(digits_, other.digits_);
    BigInt prod = mant_ * other.mant_;
    int shift = digits_ + other.digits_ - d;
    return Fixed(div_round(prod, pow10(shift), mode), d);
}

Fixed Fixed::div(const Fixed& other, Rounding mode) const {
    if (other.mant_ == 0) throw std::domain_error("Fixed: division by zero");
    int d = std::max(digits_, other.digits_);
    // (ma/10^da)/(mb/10^db) at scale d: ma*10^(d+db-da)/mb
    int e = d + other.digits_ - digits_;
    BigInt num = mant_;
    BigInt den = other.mant_;
    if (e >= 0) num *= pow10(e); else den *= pow10(-e);
    if (den < 0) { num = -num; den = -den; }
    return Fixed(div_round(num, den, mode), d);
}

Fixed Fixed::mul_int(const BigInt& k) const { return Fixed(mant_ * k, digits_); }

Fixed Fixed::div_int(const BigInt& k, Rounding mode) const {
    if (k == 0) throw std::domain_error("Fixed: division by zero");
    BigInt num = mant_, den = k;
    if (den < 0) { num = -num; den = -den; }
    return Fixed(div_round(num, den, mode), digits_);
}

Fixed Fixed::mul_pow2(long long e, Rounding mode) const {
    if (std::llabs(e) > kMaxPow2Shift)
        throw PrecisionError("Fixed: power-of-two scaling exceeds representable range");
    if (e >= 0) return Fixed(mant_ << static_cast<unsigned>(e), digits_);
    return Fixed(div_round(mant_, BigInt(1) << static_cast<unsigned>(-e), mode), digits_);
}

int Fixed::compare(const Fixed& other) const {
    int d = std::max(digits_, other.digits_);
    BigInt a = rescaled(d).mant_;
    BigInt b = other.rescaled(d).mant_;
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

std::string Fixed::str() const {
    BigInt a = boost::multiprecision::abs(mant_);
    BigInt ip = a / pow10(digits_);
    BigInt fp = a % pow10(digits_);
    std::string out;
    if (mant_ < 0) out += '-';
    out += ip.str();
    if (digits_ > 0) {
        std::string frac = fp.str();
        out += '.';
        out += std::string(digits_ - frac.size(), '0');
        out += frac;
    }
    return out;
}

std::string Fixed::str(int decimals) const { return rescaled(decimals).str(); }

double Fixed::to_double() const {
    // Split to avoid overflowing the conversion for huge mantissas.
    int len = decimal_digits(mant_);
    if (len <= 300) {
        return mant_.convert_to<double>() * std::pow(10.0, -digits_);
    }
    int drop = len - 18;
    BigInt lead = mant_ / pow10(drop);
    return lead.convert_to<double>() * std::pow(10.0, drop - digits_);
}

double log10_double(const Fixed& x) {
    if (x.sign() <= 0) throw std::domain_error("log10: nonpositive argument");
    const BigInt m = boost::multiprecision::abs(x.mantissa());
    int len = decimal_digits(m);
    int drop = std::max(0, len - 18);
    double lead = BigInt(m / pow10(drop)).convert_to<double>();
    return std::log10(lead) + drop - x.digits();
}

namespace {

// exp on |r| <= 0.5 by Taylor series at working scale.
Fixed exp_small(const Fixed& r, int work) {
    Fixed sum = Fixed::from_integer(1, work);
    Fixed term = sum;
    for (int k = 1; k <= 1000; ++k) {
        term = term.mul(r).div_int(k);
        if (term.is_zero()) return sum;
        sum = sum + term;
        if (boost::multiprecision::abs(term.mantissa()) <= 4) return sum;
    }
    throw PrecisionError("exp: series did not converge");
}

// atanh-based ln on y in roughly [0.7, 1.5).
Fixed ln_near_one(const Fixed& y, int work) {
    Fixed one = Fixed::from_integer(1, work);
    Fixed z = (y - one).div(y + one);
    Fixed zsq = z.mul(z);
    Fixed term = z;
    Fixed sum = z;
    for (int j = 3; j <= 4000; j += 2) {
        term = term.mul(zsq);
        Fixed contrib = term.div_int(j);
        if (contrib.is_zero()) break;
        sum = sum + contrib;
        if (boost::multiprecision::abs(contrib.mantissa()) <= 4) break;
    }
    return sum.mul_int(2);
}

}  // namespace

const Fixed& ln2_const(int digits) {
    thread_local std::map<int, Fixed> cache;
    auto it = cache.find(digits);
    if (it != cache.end()) return it->second;
    // ln 2 = 2 atanh(1/3)
    int work = digits + 8;
    Fixed third = Fixed::from_integer(1, work).div_int(3);
    Fixed zsq = third.mul(third);
    Fixed term = third;
    Fixed sum = third;
    for (int j = 3; j <= 8000; j += 2) {
        term = term.mul(zsq);
        Fixed contrib = term.div_int(j);
        if (contrib.is_zero()) break;
        sum = sum + contrib;
        if (boost::multiprecision::abs(contrib.mantissa()) <= 4) break;
    }
    return cache.emplace(digits, sum.mul_int(2).rescaled(digits)).first->second;
}

const Fixed& ln10_const(int digits) {
    thread_local std::map<int, Fixed> cache;
    auto it = cache.find(digits);
    if (it != cache.end()) return it->second;
    // ln 10 = ln(10/8) + 3 ln 2; 10/8 = 1.25 sits in the series sweet spot.
    int work = digits + 8;
    Fixed frac = Fixed::from_string("1.25", work);
    Fixed v = ln_near_one(frac, work) + ln2_const(work).mul_int(3);
    return cache.emplace(digits, v.rescaled(digits)).first->second;
}

Fixed exp_fixed(const Fixed& x, int digits) {
    int work = digits + kGuardDigits;
    Fixed xw = x.rescaled(work);
    if (xw.is_zero()) return Fixed::from_integer(1, digits);
    const Fixed& l2 = ln2_const(work);
    BigInt n = xw.div(l2).round();
    if (boost::multiprecision::abs(n) > kMaxPow2Shift)
        throw PrecisionError("exp: argument magnitude beyond supported range");
    Fixed r = xw - l2.mul_int(n);
    Fixed v = exp_small(r, work);
    long long shift = n.convert_to<long long>();
    return v.mul_pow2(shift).rescaled(digits);
}

Fixed ln_fixed(const Fixed& x, int digits) {
    if (x.sign() <= 0) throw std::domain_error("ln: nonpositive argument");
    int work = digits + kGuardDigits;
    Fixed xw = x.rescaled(work, Rounding::Nearest);
    if (xw.is_zero())
        throw PrecisionError("ln: argument underflows working precision");
    // Estimate the binary exponent from digit counts, then nudge into [0.75, 1.5).
    long long k = static_cast<long long>(
        (decimal_digits(xw.mantissa()) - work) * 3.3219280948873623);
    Fixed y = xw.mul_pow2(-k);
    const Fixed threshold_hi = Fixed::from_string("1.5", work);
    const Fixed threshold_lo = Fixed::from_string("0.75", work);
    while (y >= threshold_hi) { y = y.mul_pow2(-1); ++k; }
    while (y < threshold_lo) { y = y.mul_pow2(1); --k; }
    Fixed v = ln_near_one(y, work) + ln2_const(work).mul_int(k);
    return v.rescaled(digits);
}

Fixed pow_fixed(const Fixed& base, const Fixed& exponent, int digits) {
    if (base.sign() <= 0) throw std::domain_error("pow: nonpositive base");
    if (exponent.is_zero()) return Fixed::from_integer(1, digits);
    // Extra guard to absorb |exponent * ln base| cancellation in exp's reduction.
    double mag = std::abs(exponent.to_double()) * (std::abs(log10_double(base)) + 1.0);
    int extra = mag > 1.0 ? static_cast<int>(std::log10(mag)) + 2 : 0;
    int work = digits + kGuardDigits + extra;
    Fixed t = exponent.rescaled(work).mul(ln_fixed(base, work));
    return exp_fixed(t, work).rescaled(digits);
}

Fixed log10_fixed(const Fixed& x, int digits) {
    int work = digits + kGuardDigits;
    return ln_fixed(x, work).div(ln10_const(work)).rescaled(digits);
}

Fixed sqrt_fixed(const Fixed& x, int digits, Rounding mode) {
    if (x.sign() < 0) throw std::domain_error("sqrt: negative argument");
    // sqrt(m/10^d) at scale `digits`: isqrt(m * 10^(2*digits - d)) when exact scaling possible.
    BigInt scaled = x.mantissa() * pow10(2 * digits - std::min(x.digits(), 2 * digits));
    if (x.digits() > 2 * digits) scaled = div_round(x.mantissa(), pow10(x.digits() - 2 * digits), Rounding::Down);
    BigInt root = isqrt(scaled);
    if (mode == Rounding::Up && root * root != scaled) ++root;
    return Fixed::from_mantissa(root, digits);
}

}  // namespace phigraph
