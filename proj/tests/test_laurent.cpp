#include <doctest.h>

#include <stdexcept>

#include "mvp/laurent.hpp"

using mvp::CoeffTable;
using mvp::LaurentPoly;
using mvp::Rational;

TEST_SUITE_BEGIN("laurent");

TEST_CASE("basis polynomials") {
    LaurentPoly d0 = mvp::make_D(0, 2);
    CHECK(d0.coeff(0) == Rational(2));

    LaurentPoly d2 = mvp::make_D(2, 3);
    CHECK(d2.coeff(2) == Rational(1));
    CHECK(d2.coeff(-2) == Rational(9));
    CHECK(d2.coeff(0) == Rational(0));

    LaurentPoly s1 = mvp::make_S(1, 2);
    CHECK(s1.coeff(1) == Rational(1, 3));
    CHECK(s1.coeff(0) == Rational(-1));
    CHECK(s1.coeff(-1) == Rational(2, 3));

    LaurentPoly s2 = mvp::make_S(2, 2);
    CHECK(s2.coeff(2) == Rational(1, 9));
    CHECK(s2.coeff(1) == Rational(-2, 3));
    CHECK(s2.coeff(0) == Rational(13, 9));
    CHECK(s2.coeff(-1) == Rational(-4, 3));
    CHECK(s2.coeff(-2) == Rational(4, 9));
}

TEST_CASE("decomposition rows") {
    auto r1 = mvp::decompose_D(1, 2);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0] == Rational(3));
    CHECK(r1[1] == Rational(3));

    auto r3 = mvp::decompose_D(3, 2);
    REQUIRE(r3.size() == 4);
    CHECK(r3[0] == Rational(9));
    CHECK(r3[1] == Rational(63));
    CHECK(r3[2] == Rational(81));
    CHECK(r3[3] == Rational(27));

    // reconstruct: sum a_i S_i must reproduce D_n exactly
    LaurentPoly acc;
    for (int i = 0; i < 4; ++i)
        acc += mvp::make_S(i, 2).scaled(r3[static_cast<size_t>(i)]);
    CHECK(acc == mvp::make_D(3, 2));
}

TEST_CASE("decomposition rejects inputs outside the span") {
    LaurentPoly bad;
    bad.add_term(2, Rational(1));  // x^2 alone cannot be written in S_0..S_2
    CHECK_THROWS_AS(mvp::decompose_in_S(bad, 2), std::logic_error);
}

TEST_CASE("negative rows come from their own elimination") {
    for (long q : {2l, 3l}) {
        for (long n = 1; n <= 6; ++n) {
            auto pos = mvp::decompose_D(n, q);
            auto neg = mvp::decompose_D(-n, q);
            REQUIRE(pos.size() == neg.size());
            Rational qn(mvp::int_pow(q, static_cast<unsigned long>(n)));
            for (size_t k = 0; k < pos.size(); ++k)
                CHECK(pos[k] == neg[k] * qn);
        }
    }
}

TEST_CASE("table construction agrees with per-row decomposition and recurrence") {
    for (long q : {2l, 5l}) {
        CoeffTable t1 = CoeffTable::build(q, 8);
        CoeffTable t2 = CoeffTable::build_by_recurrence(q, 8);
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(t1.a(n, k) == t2.a(n, k));
        CHECK(t1.a(0, 0) == Rational(2));
        CHECK_THROWS_AS(t1.a(9, 0), std::out_of_range);
        CHECK_THROWS_AS(t1.a(3, 4), std::out_of_range);
    }
}

TEST_CASE("row recurrences") {
    for (long q : {2l, 3l}) {
        for (long n = 2; n <= 7; ++n) {
            CHECK(mvp::recurrence_check(n, 0, q).pass);
            CHECK(mvp::recurrence_check(n, 2, q).pass);
            CHECK(mvp::recurrence_check(n, static_cast<int>(n), q).pass);
        }
    }
}

TEST_CASE("contraction annihilates lower rows") {
    for (long q : {2l, 3l})
        for (int k = 0; k <= 4; ++k)
            CHECK(mvp::linear_form_check(k, k + 4, q).pass);
}

TEST_CASE("gamma polynomials solve the linear system") {
    auto g0 = mvp::solve_gamma(0, 2);
    REQUIRE(g0.coeffs.size() == 1);
    CHECK(g0.coeffs[0] == Rational(1));

    auto g1 = mvp::solve_gamma(1, 2);
    REQUIRE(g1.coeffs.size() == 2);
    CHECK(g1.coeffs[0] == Rational(-1));  // gamma_1(n) = -n for q = 2
    CHECK(g1.coeffs[1] == Rational(0));

    // general q: gamma_1(n) = n/(1-q)
    for (long q : {3l, 5l, 7l}) {
        auto g = mvp::solve_gamma(1, q);
        CHECK(g.coeffs[0] == Rational(1, 1 - q));
        CHECK(g.coeffs[1] == Rational(0));
    }

    auto g2 = mvp::solve_gamma(2, 2);
    CHECK(g2.eval(1) == Rational(2));   // (1+3)/2
    CHECK(g2.eval(-1) == Rational(-1));  // (1-3)/2

    // gamma_k(0) = 0 for k >= 1 comes from the first system row
    for (int k = 1; k <= 6; ++k)
        CHECK(mvp::solve_gamma(k, 3).eval(0) == Rational(0));
}

TEST_CASE("closed form reproduces every table entry") {
    for (long q : {2l, 3l}) {
        CoeffTable t = CoeffTable::build(q, 7);
        std::vector<mvp::GammaPoly> gs;
        for (int k = 0; k <= 7; ++k)
            gs.push_back(mvp::solve_gamma(k, q));
        for (long n = 0; n <= 7; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(mvp::closed_form_a(n, gs[static_cast<size_t>(k)]) ==
                      t.a(n, k));
    }
}

TEST_CASE("polynomial pair fit") {
    auto p1 = mvp::fit_P(1, 2, 6);
    REQUIRE(p1.P.size() == 2);
    CHECK(p1.P[0] == Rational(0));
    CHECK(p1.P[1] == Rational(-3));  // P_1(n) = -3n at q = 2
    CHECK(p1.Phat[1] == Rational(3));

    auto p0 = mvp::fit_P(0, 3, 4);
    CHECK(p0.eval_P(5) == Rational(1));
    CHECK(p0.eval_Phat(5) == Rational(1));

    // mirror symmetry and held-out validation run for higher k as well
    CHECK_NOTHROW(mvp::fit_P(2, 2, 9));
    CHECK_NOTHROW(mvp::fit_P(3, 3, 12));
    CHECK_THROWS_AS(mvp::fit_P(2, 2, 7), std::invalid_argument);  // needs nmax >= 8
}

TEST_CASE("exact linear solver") {
    // 2x2: x + y = 3, x - y = 1
    std::vector<std::vector<Rational>> A{{Rational(1), Rational(1)},
                                         {Rational(1), Rational(-1)}};
    std::vector<Rational> b{Rational(3), Rational(1)};
    auto x = mvp::solve_linear_exact(A, b);
    CHECK(x[0] == Rational(2));
    CHECK(x[1] == Rational(1));

    std::vector<std::vector<Rational>> sing{{Rational(1), Rational(2)},
                                            {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(mvp::solve_linear_exact(sing, b), std::domain_error);
}

TEST_CASE("csv export covers the symmetric range") {
    CoeffTable t = CoeffTable::build(2, 1);
    std::string csv = mvp::coeff_table_csv(t);
    CHECK(csv ==
          "q,n,k,num,den\n"
          "2,-1,0,3,2\n"
          "2,-1,1,3,2\n"
          "2,0,0,2,1\n"
          "2,1,0,3,1\n"
          "2,1,1,3,1\n");
}

TEST_SUITE_END();
