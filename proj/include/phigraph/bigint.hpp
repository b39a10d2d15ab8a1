#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace phigraph {

using BigInt = boost::multiprecision::cpp_int;

// Raised when a certified computation cannot separate a value from an
// integer boundary (or an evaluation exceeds its precision budget).
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

enum class Rounding { Nearest, Down, Up };

// 10^n, memoized per thread.
inline const BigInt& pow10(int n) {
    thread_local std::unordered_map<int, BigInt> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    BigInt v = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(n));
    return cache.emplace(n, std::move(v)).first->second;
}

// num/den rounded per mode; den must be positive.
inline BigInt div_round(const BigInt& num, const BigInt& den, Rounding mode) {
    BigInt q = num / den;  // truncates toward zero
    BigInt r = num - q * den;
    switch (mode) {
        case Rounding::Down:
            if (r < 0) --q;
            break;
        case Rounding::Up:
            if (r > 0) ++q;
            break;
        case Rounding::Nearest: {
            if (r != 0) {
                BigInt twice = 2 * boost::multiprecision::abs(r);
                if (twice >= den) q += (num < 0) ? -1 : 1;
            }
            break;
        }
    }
    return q;
}

// floor(sqrt(x)) by Newton iteration; x >= 0.
inline BigInt isqrt(const BigInt& x) {
    if (x < 0) throw std::domain_error("isqrt: negative argument");
    if (x == 0) return 0;
    BigInt guess = BigInt(1) << (static_cast<unsigned>(boost::multiprecision::msb(x)) / 2 + 1);
    BigInt prev;
    do {
        prev = guess;
        guess = (guess + x / guess) / 2;
    } while (guess < prev);
    return prev;
}

inline int decimal_digits(const BigInt& x) {
    if (x == 0) return 1;
    BigInt a = boost::multiprecision::abs(x);
    return static_cast<int>(a.str().size());
}

}  // namespace phigraph
