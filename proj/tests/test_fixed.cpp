#include "doctest.h"

#include "goldens.hpp"
#include "phigraph/fixed.hpp"
#include "phigraph/interval.hpp"

#include <string>

using namespace phigraph;

namespace {

Fixed golden(const char* s, int digits = 60) { return Fixed::from_string(s, digits); }

// |x - y| <= 10^(-tol_digits)
void check_close(const Fixed& x, const Fixed& y, int tol_digits) {
    Fixed diff = (x - y).abs();
    CAPTURE(x.str());
    CAPTURE(y.str());
    CHECK(diff <= Fixed::from_mantissa(1, tol_digits));
}

}  // namespace

TEST_CASE("fixed point basics") {
    Fixed a = Fixed::from_string("1.25", 10);
    Fixed b = Fixed::from_string("-0.75", 10);
    CHECK((a + b).str() == "0.5000000000");
    CHECK((a - b).str() == "2.0000000000");
    CHECK(a.mul(b).str() == "-0.9375000000");
    CHECK(a.div(Fixed::from_integer(2, 10)).str() == "0.6250000000");
    CHECK(a.floor() == 1);
    CHECK(a.ceil() == 2);
    CHECK(b.floor() == -1);
    CHECK(b.ceil() == 0);
    CHECK(Fixed::from_string("2.5", 4).round() == 3);
    CHECK(a > b);
    CHECK(Fixed::from_string("1.25", 10) == Fixed::from_string("1.250000", 30));
}

TEST_CASE("fixed string parsing and rendering") {
    CHECK(Fixed::from_string("0.1", 5).str() == "0.10000");
    CHECK(Fixed::from_string("-3", 2).str() == "-3.00");
    CHECK(Fixed::from_string("12.345678", 3).str() == "12.346");  // rounded
    CHECK_THROWS_AS(Fixed::from_string("1.2.3", 5), std::invalid_argument);
    CHECK_THROWS_AS(Fixed::from_string("abc", 5), std::invalid_argument);
    CHECK(Fixed::from_integer(7, 0).str() == "7");
}

TEST_CASE("rescale directions") {
    Fixed x = Fixed::from_string("1.7", 1);
    CHECK(x.rescaled(0, Rounding::Down).str() == "1");
    CHECK(x.rescaled(0, Rounding::Up).str() == "2");
    CHECK(x.rescaled(0, Rounding::Nearest).str() == "2");
    CHECK(x.rescaled(5).str() == "1.70000");  // upscale exact
}

TEST_CASE("mul_pow2 and div_int") {
    Fixed x = Fixed::from_string("3.5", 20);
    CHECK(x.mul_pow2(3).str(2) == "28.00");
    CHECK(x.mul_pow2(-1).str(2) == "1.75");
    CHECK(Fixed::from_integer(10, 10).div_int(4).str() == "2.5000000000");
}

TEST_CASE("ln and exp against frozen references") {
    check_close(ln2_const(60), golden(goldens::kLn2), 57);
    check_close(ln10_const(60), golden(goldens::kLn10), 57);
    check_close(exp_fixed(Fixed::from_integer(1, 60), 60), golden(goldens::kExp1), 56);
    check_close(ln_fixed(golden(goldens::kExp1), 60), Fixed::from_integer(1, 60), 56);
    // round trip at scattered magnitudes
    for (const char* s : {"0.0001", "0.5", "3.25", "100", "12345.678"}) {
        Fixed x = Fixed::from_string(s, 50);
        check_close(exp_fixed(ln_fixed(x, 50), 50), x.rescaled(50), 45);
    }
}

TEST_CASE("pow against frozen references") {
    Fixed phi_sq = golden(goldens::kPhiSq);
    check_close(pow_fixed(Fixed::from_integer(2, 60), phi_sq, 60),
                golden(goldens::kTwoPhiSq), 55);
    check_close(pow_fixed(Fixed::from_integer(5, 60), phi_sq, 60),
                golden(goldens::kFivePhiSq), 55);
    check_close(pow_fixed(Fixed::from_integer(10, 60), phi_sq, 60),
                golden(goldens::kTenPhiSq), 55);
    check_close(pow_fixed(Fixed::from_integer(3, 60), golden(goldens::kPhi), 60),
                golden(goldens::kThreePhi), 55);
    // exact integer exponent matches exact integer power
    Fixed big = pow_fixed(Fixed::from_integer(7, 40), Fixed::from_integer(13, 40), 40);
    CHECK(big.round() == BigInt("96889010407"));
}

TEST_CASE("sqrt fixed") {
    check_close(sqrt_fixed(Fixed::from_integer(5, 60), 60), golden(goldens::kSqrt5), 58);
    CHECK(sqrt_fixed(Fixed::from_integer(49, 30), 30) == Fixed::from_integer(7, 30));
}

TEST_CASE("log10 helpers") {
    Fixed x = Fixed::from_integer(BigInt("1000000"), 30);
    CHECK(log10_fixed(x, 30).round() == 6);
    CHECK(log10_double(x) == doctest::Approx(6.0));
    // values far beyond double range still give a finite log10
    Fixed huge = Fixed::from_integer(boost::multiprecision::pow(BigInt(10), 400), 10);
    CHECK(log10_double(huge) == doctest::Approx(400.0));
}

TEST_CASE("interval enclosures contain truth") {
    IReal five = iv_from_int(5, 60);
    IReal r5 = iv_sqrt5(60);
    Fixed truth = golden(goldens::kSqrt5);
    CHECK(r5.lo <= truth);
    CHECK(truth <= r5.hi);

    IReal l = iv_ln(five, 60);
    Fixed ln5 = ln_fixed(Fixed::from_integer(5, 80), 70);
    CHECK(l.lo <= ln5.rescaled(70));
    CHECK(ln5.rescaled(70) <= l.hi);

    IReal p = iv_pow(iv_from_int(2, 60), iv_point(golden(goldens::kPhiSq), 60), 60);
    CHECK(p.lo <= golden(goldens::kTwoPhiSq));
    CHECK(golden(goldens::kTwoPhiSq) <= p.hi);
    // width stays tiny
    CHECK(p.width() <= Fixed::from_mantissa(1, 40));
}

TEST_CASE("interval multiplication handles signs") {
    IReal neg{Fixed::from_string("-2", 30), Fixed::from_string("-1", 30)};
    IReal pos{Fixed::from_string("3", 30), Fixed::from_string("4", 30)};
    IReal prod = iv_mul(neg, pos);
    CHECK(prod.lo == Fixed::from_integer(-8, 30));
    CHECK(prod.hi == Fixed::from_integer(-3, 30));
    IReal span{Fixed::from_string("-1", 30), Fixed::from_string("2", 30)};
    IReal prod2 = iv_mul(span, span);
    CHECK(prod2.lo == Fixed::from_integer(-2, 30));
    CHECK(prod2.hi == Fixed::from_integer(4, 30));
}

TEST_CASE("exp rejects absurd magnitudes instead of looping") {
    CHECK_THROWS_AS(exp_fixed(Fixed::from_integer(BigInt("100000000000"), 40), 40),
                    PrecisionError);
}
