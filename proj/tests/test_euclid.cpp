#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "mvp/euclid_checks.hpp"
#include "mvp/multipoly.hpp"
#include "mvp/radial.hpp"
#include "mvp/rng.hpp"

using mvp::Exponents;
using mvp::MultiPoly;
using mvp::RadialPoly;
using mvp::Rational;

TEST_SUITE_BEGIN("euclid");

TEST_CASE("sphere averages of monomials") {
    CHECK(mvp::sphere_avg_monomial({2, 0, 0}, 3) == Rational(1, 3));
    CHECK(mvp::sphere_avg_monomial({4, 0, 0}, 3) == Rational(1, 5));
    CHECK(mvp::sphere_avg_monomial({2, 2, 0}, 3) == Rational(1, 15));
    CHECK(mvp::sphere_avg_monomial({1, 0, 0}, 3) == Rational(0));
    CHECK(mvp::sphere_avg_monomial({3, 1, 0}, 3) == Rational(0));
    // d=1: the sphere is the two points -r, r, so even powers average to r^2k
    CHECK(mvp::sphere_avg_monomial({6}, 1) == Rational(1));
    CHECK(mvp::sphere_avg_monomial({2, 0}, 2) == Rational(1, 2));
    CHECK(mvp::sphere_avg_monomial({2, 2}, 2) == Rational(1, 8));
}

TEST_CASE("sphere averages agree with Monte Carlo sampling in d=3") {
    // Independent numeric oracle: uniform points via normalized gaussians.
    std::mt19937_64 eng(20250822);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int samples = 200000;
    double m2 = 0, m4 = 0, m22 = 0;
    for (int s = 0; s < samples; ++s) {
        double x = gauss(eng), y = gauss(eng), z = gauss(eng);
        double r = std::sqrt(x * x + y * y + z * z);
        x /= r;
        y /= r;
        m2 += x * x;
        m4 += x * x * x * x;
        m22 += x * x * y * y;
    }
    CHECK(std::fabs(m2 / samples - 1.0 / 3.0) < 5e-3);
    CHECK(std::fabs(m4 / samples - 1.0 / 5.0) < 5e-3);
    CHECK(std::fabs(m22 / samples - 1.0 / 15.0) < 5e-3);
}

TEST_CASE("laplacian of multivariate polynomials") {
    MultiPoly f = mvp::parse_multipoly("1 * x1^4", 2);
    MultiPoly expect = mvp::parse_multipoly("12 * x1^2", 2);
    CHECK(mvp::laplacian(f) == expect);

    MultiPoly g = mvp::parse_multipoly("1 * x1^2 x2 + 3 * x2^3", 2);
    MultiPoly eg = mvp::parse_multipoly("2 * x2 + 18 * x2", 2);
    CHECK(mvp::laplacian(g) == eg);

    // harmonic: x1^2 - x2^2
    MultiPoly h = mvp::parse_multipoly("1 * x1^2 + -1 * x2^2", 2);
    CHECK(mvp::laplacian(h).is_zero());

    MultiPoly c = mvp::parse_multipoly("7/2", 3);
    CHECK(mvp::laplacian(c).is_zero());
    CHECK(mvp::laplacian_power(f, 2) == mvp::parse_multipoly("24", 2));
    CHECK(mvp::laplacian_power(f, 3).is_zero());
}

TEST_CASE("polynomial parser") {
    MultiPoly f = mvp::parse_multipoly("-2/3 * x1 x2^2 + 1", 3);
    CHECK(f.terms.size() == 2);
    CHECK(f.terms.at(Exponents{1, 2, 0}) == Rational(-2, 3));
    CHECK(f.value_at_origin() == Rational(1));
    CHECK(f.total_degree() == 3);
    CHECK_THROWS_AS(mvp::parse_multipoly("1 * x4", 3), std::invalid_argument);
    CHECK_THROWS_AS(mvp::parse_multipoly("bogus", 2), std::invalid_argument);
}

TEST_CASE("radial operator on single powers") {
    // rule: x^n -> (n-d+1)(n-1) x^(n-2)
    CHECK(mvp::radial_delta(RadialPoly::monomial(3), 2) ==
          RadialPoly::monomial(1, Rational(4)));
    CHECK(mvp::radial_delta(RadialPoly::monomial(4), 3) ==
          RadialPoly::monomial(2, Rational(6)));
    // x^(d-1) is annihilated: n = d-1 kills the first factor
    for (int d = 1; d <= 6; ++d)
        CHECK(mvp::radial_delta(RadialPoly::monomial(d - 1), d).is_zero());
    // powers below x^(d-1) are outside the operator's domain
    CHECK_THROWS_AS(mvp::radial_delta(RadialPoly::monomial(1), 3), std::domain_error);
}

TEST_CASE("sphere average of a polynomial as a radial profile") {
    MultiPoly f = mvp::parse_multipoly("1 * x1^2 + 5", 3);
    auto prof = mvp::sphere_avg(f);
    CHECK(prof.coeff(0) == Rational(5));
    CHECK(prof.coeff(2) == Rational(1, 3));
    auto g = mvp::radial_from_profile(prof, 3);
    CHECK(g.min_power() == 2);  // x^2 (5 + r^2/3) starts at power 2
    CHECK(g.terms().at(2) == Rational(5));
    CHECK(g.terms().at(4) == Rational(1, 3));
}

TEST_CASE("annihilation of shifted even powers") {
    for (int d = 1; d <= 6; ++d) {
        CHECK(mvp::annihilation_check(0, d, 12).pass);
        CHECK(mvp::annihilation_check(1, d, 12).pass);
        CHECK(mvp::annihilation_check(5, d, 12).pass);
    }
}

TEST_CASE("mean value property for specific polynomials") {
    // harmonic polynomial: the plain average already recovers f(0)
    MultiPoly h = mvp::parse_multipoly("1 * x1^2 + -1 * x2^2 + 4", 2);
    CHECK(mvp::mvp_check(h, 2).pass);

    // non-harmonic: needs the corrective series
    MultiPoly f = mvp::parse_multipoly("1 * x1^4 + -3 * x1 x2^2 + 2/7 * x2^2 + -5", 2);
    CHECK(mvp::mvp_check(f, 2).pass);

    MultiPoly g = mvp::parse_multipoly("2 * x1^2 x2^2 x3^2 + 1 * x3^4 + -1/2", 3);
    CHECK(mvp::mvp_check(g, 3).pass);
}

TEST_CASE("mean value and commuting on random polynomials") {
    for (int d = 1; d <= 5; ++d) {
        std::mt19937_64 eng(1000 + static_cast<std::uint64_t>(d));
        for (int i = 0; i < 4; ++i) {
            MultiPoly f = mvp::random_multipoly(d, 6, eng);
            CHECK(mvp::mvp_check(f, d).pass);
            CHECK(mvp::commuting_check(f, d, 2).pass);
        }
    }
}

TEST_CASE("eigenfunction product diagnostics") {
    // inside the convergence region the product hits 1 to full precision
    auto good = mvp::eigen_product_check(3, 1.0, 40);
    CHECK(good.pass);

    // t beyond the first reciprocal-root diverges and must be flagged
    auto div = mvp::eigen_product_check(1, 2.0, 40);
    CHECK_FALSE(div.pass);
    CHECK(div.params.contains("divergent"));
    CHECK(div.params["divergent"] == true);

    // t inside the region but too close to it: order 40 is not converged,
    // and the check must report the honest residual rather than pass
    auto slow = mvp::eigen_product_check(1, 1.5, 40);
    CHECK_FALSE(slow.pass);
    CHECK_FALSE(slow.residual.empty());
}

TEST_SUITE_END();
