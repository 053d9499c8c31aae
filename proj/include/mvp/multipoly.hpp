#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "mvp/rational.hpp"

namespace mvp {

// Exponent vector for x1..xd; length equals the ambient dimension.
using Exponents = std::vector<int>;

// Sparse multivariate polynomial over the rationals. Terms map exponent
// vectors to nonzero coefficients; zero coefficients are never stored.
struct MultiPoly {
    int dim = 0;
    std::map<Exponents, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    int total_degree() const;           // -1 for the zero polynomial
    Rational value_at_origin() const;   // the constant term

    void add_term(const Exponents& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.dim == b.dim && a.terms == b.terms;
    }

    // Text form "c * x1^a x2^b + ...", coefficients as p or p/q.
    std::string str() const;
};

MultiPoly laplacian(const MultiPoly& f);
MultiPoly laplacian_power(const MultiPoly& f, int n);

// Parses the text form emitted by MultiPoly::str. Whitespace between factors
// is required, '^1' may be omitted, a bare rational is a constant term.
// Throws std::invalid_argument on malformed input or variable index > dim.
MultiPoly parse_multipoly(const std::string& text, int dim);

// Dense-ish random polynomial: every monomial of total degree <= max_degree
// is included with probability ~1/2, nonzero rational coefficients.
MultiPoly random_multipoly(int dim, int max_degree, std::mt19937_64& eng);

}  // namespace mvp
