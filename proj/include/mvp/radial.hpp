#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvp/multipoly.hpp"
#include "mvp/rational.hpp"

namespace mvp {

// Univariate polynomial in the sphere radius r, dense by power.
// Trailing zeros are trimmed; the zero polynomial has empty coeffs.
struct RadialProfile {
    std::vector<Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    Rational coeff(int power) const {
        if (power < 0 || power >= static_cast<int>(coeffs.size()))
            return Rational(0);
        return coeffs[static_cast<size_t>(power)];
    }
    Rational constant_term() const { return coeff(0); }
    void add_coeff(int power, const Rational& c);
    void trim();

    RadialProfile& operator+=(const RadialProfile& o);
    friend bool operator==(const RadialProfile& a, const RadialProfile& b) {
        return a.coeffs == b.coeffs;
    }
    std::string str() const;  // "c0 + c2 r^2 + ..."
};

// Univariate polynomial in x of the form x^shift * (c0 + c1 x + ...).
// Canonical: c0 nonzero, last coefficient nonzero; the zero polynomial has
// empty coeffs and shift 0. shift may be any integer internally.
struct RadialPoly {
    int shift = 0;
    std::vector<Rational> coeffs;

    static RadialPoly monomial(int power, const Rational& c = Rational(1));
    static RadialPoly from_terms(const std::map<int, Rational>& terms);

    bool is_zero() const { return coeffs.empty(); }
    int min_power() const { return shift; }
    std::map<int, Rational> terms() const;

    RadialPoly& operator+=(const RadialPoly& o);
    friend RadialPoly operator+(RadialPoly a, const RadialPoly& b) { return a += b; }
    RadialPoly scaled(const Rational& c) const;
    RadialPoly shifted(int dpow) const;  // multiply by x^dpow
    friend bool operator==(const RadialPoly& a, const RadialPoly& b) {
        return a.shift == b.shift && a.coeffs == b.coeffs;
    }
    std::string str() const;
};

// Average of prod x_i^{e_i} over the radius-r sphere is rho * r^{|e|};
// returns rho. Zero if any exponent is odd. For d = 1 the sphere is the
// two-point set {-r, r}.
Rational sphere_avg_monomial(const Exponents& exps, int d);

// Sphere average of f as a polynomial in the radius r. Only even powers
// occur; the constant term is f(0).
RadialProfile sphere_avg(const MultiPoly& f);

// x^{d-1} * profile(x), the form the radial operator acts on.
RadialPoly radial_from_profile(const RadialProfile& p, int d);

// Radial operator: d/dx ( x^{d-1} d/dx ( g / x^{d-1} ) ).
// On monomials, x^n maps to (n-d+1)(n-1) x^{n-2}. Requires g divisible by
// x^{d-1}, i.e. g.shift >= d-1.
RadialPoly radial_delta(const RadialPoly& g, int d);

}  // namespace mvp
