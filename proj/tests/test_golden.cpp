#include "doctest.h"

#include "goldens.hpp"
#include "phigraph/golden.hpp"

using namespace phigraph;

TEST_CASE("golden_pow matches the Fibonacci closed form") {
    CHECK(golden_pow(0) == GoldenInt(1, 0));
    CHECK(golden_pow(1) == GoldenInt(0, 1));
    CHECK(golden_pow(2) == GoldenInt(1, 1));
    CHECK(golden_pow(5) == GoldenInt(3, 5));
    // phi^n = F(n-1) + F(n) phi for all n <= 40
    BigInt prev = 1, cur = 0;  // F(-1), F(0)
    for (int n = 0; n <= 40; ++n) {
        CHECK(golden_pow(n) == GoldenInt(prev, cur));
        BigInt next = prev + cur;
        prev = cur;
        cur = next;
    }
}

TEST_CASE("golden multiplication is the power homomorphism") {
    for (int m = 0; m <= 40; m += 3)
        for (int n = 0; n <= 40; n += 7)
            CHECK(golden_pow(m) * golden_pow(n) == golden_pow(m + n));
    // defining relation phi^2 = phi + 1
    CHECK(GoldenInt(0, 1) * GoldenInt(0, 1) == GoldenInt(1, 1));
}

TEST_CASE("geometric sum identity holds exactly for all R <= 50") {
    for (int R = 1; R <= 50; ++R)
        for (int i = 1; i <= R; ++i) {
            CAPTURE(R);
            CAPTURE(i);
            CHECK(geometric_sum_check(R, i));
        }
    CHECK_THROWS_AS(geometric_sum_check(3, 0), std::domain_error);
    CHECK_THROWS_AS(geometric_sum_check(3, 4), std::domain_error);
}

TEST_CASE("worked instances of the geometric identity") {
    // R=3, i=1: phi^2 + phi + 1 = 2 + 2 phi = phi^4 - phi
    GoldenInt sum = golden_pow(0) + golden_pow(1) + golden_pow(2);
    CHECK(sum == GoldenInt(2, 2));
    CHECK(golden_pow(4) - golden_pow(1) == GoldenInt(2, 2));
    // R=2, i=2: phi = phi^3 - phi^2
    CHECK(golden_pow(3) - golden_pow(2) == golden_pow(1));
}

TEST_CASE("golden constants") {
    GoldenConstants c = golden_constants(30);
    CHECK(c.phi.str().substr(0, 31) == "1.61803398874989484820458683436");
    // defining identity within 10^(-precision+2)
    Fixed gap = (c.phi_sq - c.phi - Fixed::from_integer(1, 30)).abs();
    CHECK(gap <= Fixed::from_mantissa(1, 28));
    // weight identity p + q = 1 exactly (both are linear in phi)
    CHECK(c.inv_phi + c.inv_phi_sq == Fixed::from_integer(1, 30));
    CHECK(c.inv_phi_sq == Fixed::from_integer(2, 30) - c.phi);
    CHECK_THROWS_AS(golden_constants(20), std::invalid_argument);

    GoldenConstants c60 = golden_constants(60);
    Fixed ref = Fixed::from_string(goldens::kPhi, 60);
    CHECK((c60.phi - ref).abs() <= Fixed::from_mantissa(10, 60));
}

TEST_CASE("real embedding tracks phi powers") {
    GoldenConstants c = golden_constants(40);
    Fixed power = Fixed::from_integer(1, 40);
    for (int n = 0; n <= 40; ++n) {
        Fixed embedded = golden_to_real(golden_pow(n), 40);
        Fixed rel_gap = (embedded - power).abs().div(power);
        CHECK(rel_gap <= Fixed::from_mantissa(1, 20));
        power = power.mul(c.phi);
    }
}
