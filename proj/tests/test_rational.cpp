#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "mvp/rational.hpp"

using mvp::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts p and p/q") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    // well-formed text naming a non-value surfaces the constructor's error
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("arithmetic stays exact through long chains") {
    // sum of 1/k(k+1) telescopes to 1 - 1/(n+1)
    Rational acc(0);
    for (long k = 1; k <= 500; ++k)
        acc += Rational(1, k * (k + 1));
    CHECK(acc == Rational(500, 501));

    Rational p = mvp::rat_pow(Rational(3, 7), 9);
    CHECK(p * mvp::rat_pow(Rational(7, 3), 9) == Rational(1));
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("negative exponents invert") {
    CHECK(mvp::rat_pow(Rational(2), -3) == Rational(1, 8));
    CHECK(mvp::rat_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(mvp::rat_pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("ordering and printing") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    std::ostringstream os;
    os << Rational(-22, 8);
    CHECK(os.str() == "-11/4");
    CHECK(Rational(4, 2).str() == "2");
}

TEST_CASE("factorial and integer powers") {
    CHECK(mvp::factorial(0) == 1);
    CHECK(mvp::factorial(10) == 3628800);
    CHECK(mvp::int_pow(3, 4) == 81);
    // 25! overflows 64-bit; must stay exact
    CHECK(mvp::factorial(25) == mpz_class("15511210043330985984000000"));
}

TEST_SUITE_END();
