#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "mvp/even_series.hpp"

using mvp::EvenSeries;
using mvp::Rational;

TEST_SUITE_BEGIN("series");

TEST_CASE("normalized coefficients in closed form per dimension") {
    // d=1: 1/(2k)!, d=3: 1/(2k+1)!, d=2: 1/(4^k (k!)^2)
    auto b1 = mvp::beta_norm_coeffs(1, 6);
    auto b2 = mvp::beta_norm_coeffs(2, 6);
    auto b3 = mvp::beta_norm_coeffs(3, 6);
    for (int k = 0; k <= 6; ++k) {
        auto uk = static_cast<unsigned long>(k);
        CHECK(b1.c[static_cast<size_t>(k)] == Rational(mpz_class(1), mvp::factorial(2 * uk)));
        CHECK(b3.c[static_cast<size_t>(k)] ==
              Rational(mpz_class(1), mvp::factorial(2 * uk + 1)));
        mpz_class kf = mvp::factorial(uk);
        CHECK(b2.c[static_cast<size_t>(k)] ==
              Rational(mpz_class(1), mvp::int_pow(4, uk) * kf * kf));
    }
}

TEST_CASE("pochhammer") {
    CHECK(mvp::pochhammer(Rational(3, 2), 0) == Rational(1));
    CHECK(mvp::pochhammer(Rational(3, 2), 2) == Rational(15, 4));
    CHECK(mvp::pochhammer(Rational(2), 3) == Rational(24));
}

TEST_CASE("series inversion is a two-sided inverse") {
    for (int d = 1; d <= 6; ++d) {
        auto b = mvp::beta_norm_coeffs(d, 16);
        auto a = mvp::invert_series(b);
        // convolve back
        for (int k = 0; k <= 16; ++k) {
            Rational conv(0);
            for (int i = 0; i <= k; ++i)
                conv += a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(k - i)];
            CHECK(conv == (k == 0 ? Rational(1) : Rational(0)));
        }
    }
    EvenSeries zero_lead{2, {Rational(0), Rational(1)}};
    CHECK_THROWS_AS(mvp::invert_series(zero_lead), std::domain_error);
}

TEST_CASE("alpha golden values") {
    auto a1 = mvp::alpha_coeffs(1, 3);
    CHECK(a1.c[0] == Rational(1));
    CHECK(a1.c[1] == Rational(-1, 2));
    CHECK(a1.c[2] == Rational(5, 24));
    CHECK(a1.c[3] == Rational(-61, 720));

    auto a2 = mvp::alpha_coeffs(2, 2);
    CHECK(a2.c[1] == Rational(-1, 4));
    CHECK(a2.c[2] == Rational(3, 64));

    // first-order coefficient is -1/(2d) in every dimension
    for (int d = 1; d <= 8; ++d)
        CHECK(mvp::alpha_coeffs(d, 1).c[1] == Rational(-1, 2 * d));
}

TEST_CASE("convolution check passes for supported range") {
    for (int d = 1; d <= 8; ++d)
        CHECK(mvp::convolution_check(d, 32).pass);
}

TEST_CASE("series evaluation matches elementary closed forms") {
    // d=1 sum is cosh(t); d=3 sum is sinh(t)/t
    double v1 = mvp::normalized_bessel_value(1, 1.0, 30);
    CHECK(std::fabs(v1 - std::cosh(1.0)) < 1e-14);
    double v3 = mvp::normalized_bessel_value(3, 1.0, 30);
    CHECK(std::fabs(v3 - std::sinh(1.0)) < 1e-14);
    double v3b = mvp::normalized_bessel_value(3, 2.0, 40);
    CHECK(std::fabs(v3b - std::sinh(2.0) / 2.0) < 1e-13);
}

TEST_CASE("truncation guard refuses unconverged tails") {
    CHECK_THROWS_AS(mvp::normalized_bessel_value(1, 30.0, 5), std::domain_error);
}

TEST_CASE("coefficient export formats") {
    auto a = mvp::alpha_coeffs(3, 2);
    auto j = mvp::coeffs_to_json(a);
    REQUIRE(j.size() == 3);
    CHECK(j[1]["d"] == 3);
    CHECK(j[1]["i"] == 1);
    CHECK(j[1]["num"] == "-1");
    CHECK(j[1]["den"] == "6");
    std::string csv = mvp::coeffs_to_csv(a);
    CHECK(csv == "d,i,num,den\n3,0,1,1\n3,1,-1,6\n3,2,7,360\n");
}

TEST_SUITE_END();
