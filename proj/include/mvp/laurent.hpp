#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvp/rational.hpp"
#include "mvp/report.hpp"

namespace mvp {

// Finitely supported exponent -> coefficient map over the integers.
struct LaurentPoly {
    std::map<int, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    Rational coeff(int e) const {
        auto it = terms.find(e);
        return it == terms.end() ? Rational(0) : it->second;
    }
    void add_term(int e, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const Rational& c) const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms == b.terms;
    }
    std::string str() const;
};

// D_n = x^n + q^n / x^n (n may be negative); D_0 = 2.
LaurentPoly make_D(long n, long q);

// S_n = ((x-1)(x-q))^n / ((q+1)^n x^n), built by n-fold product of S_1.
LaurentPoly make_S(int n, long q);

// Coefficient row [a_{n,0}, ..., a_{n,|n|}] of the unique decomposition
// D_n = sum a_{n,i} S_i, by triangular elimination from the top exponent.
// Rows for negative n come from D_{-n} = D_n / q^n.
// Coefficients of p in the basis S_0..S_m (m = top exponent magnitude);
// throws std::logic_error if p is outside the span.
std::vector<Rational> decompose_in_S(const LaurentPoly& p, long q);
std::vector<Rational> decompose_D(long n, long q);

// Rows n = 0..nmax plus derived negative rows.
struct CoeffTable {
    long q = 2;
    int nmax = 0;
    std::vector<std::vector<Rational>> rows;

    // a_{n,k} for |n| <= nmax, 0 <= k <= |n|.
    Rational a(long n, int k) const;

    static CoeffTable build(long q, int nmax);                // decomposition path
    static CoeffTable build_by_recurrence(long q, int nmax);  // forward propagation
};

// CSV with header q,n,k,num,den covering n in [-nmax, nmax].
std::string coeff_table_csv(const CoeffTable& t);

// Asserts the three-term recurrences: for i >= 1,
// a_{n,i-1} = (a_{n+1,i} - (q+1) a_{n,i} + q a_{n-1,i}) / (q+1),
// and for i = 0 the same combination vanishes.
CheckReport recurrence_check(long n, int i, long q);

// Contraction of row k against the coefficients of S_{k+1}:
// sum_{i=-(k+1)}^{k+1} c_{i,k+1} a_{n+i,k} = 0. The S_{k+1} calibration is
// forced by the i = 0 base case (the three-term recurrence is the S_1
// contraction of row 0) and the inductive step S_1 S_k = S_{k+1}.
CheckReport linear_form_check(int k, long n, long q);

// gamma_k(n) = c_{k,k} n^k + ... + c_{k,0}, stored highest power first.
struct GammaPoly {
    int k = 0;
    long q = 2;
    std::vector<Rational> coeffs;  // size k+1, descending powers

    Rational eval(long n) const;
    ordered_json to_json() const;  // {"k", "q", "coeffs": ["p/q", ...]}
};

// Exact Gaussian elimination; throws std::domain_error on a singular matrix.
std::vector<Rational> solve_linear_exact(std::vector<std::vector<Rational>> A,
                                         std::vector<Rational> b);

// Solves the (k+1)x(k+1) system: 2 gamma_k(0) = 0;
// gamma_k(j) + q^j gamma_k(-j) = 0 for j = 1..k-1;
// gamma_k(k) + q^k gamma_k(-k) = 1. gamma_0 is the constant 1 (the value
// forced by the decomposition, where a_{n,0} = 1 + q^n).
GammaPoly solve_gamma(int k, long q);

// a_{n,k} = (q+1)^k (gamma_k(n) + q^n gamma_k(-n)); total in n.
Rational closed_form_a(long n, int k, long q);
Rational closed_form_a(long n, const GammaPoly& g);

// a_{n,k} = P_k(n) + q^n Phat_k(n) with deg <= k each. Fitted on rows
// n = k..3k+1 and validated on the remaining rows up to nmax; requires
// nmax >= 3k+2 so at least one row is held out. Coefficients ascending.
struct PolyPair {
    int k = 0;
    long q = 2;
    std::vector<Rational> P, Phat;

    Rational eval_P(long n) const;
    Rational eval_Phat(long n) const;
};

PolyPair fit_P(int k, long q, int nmax);

}  // namespace mvp
