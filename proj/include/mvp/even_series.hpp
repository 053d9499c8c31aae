#pragma once

#include <string>
#include <vector>

#include "mvp/rational.hpp"
#include "mvp/report.hpp"

namespace mvp {

// Truncated formal power series in x^2: c[i] multiplies x^{2i}.
struct EvenSeries {
    int dim = 0;                 // ambient dimension the series belongs to
    std::vector<Rational> c;

    int order() const { return static_cast<int>(c.size()) - 1; }
    const Rational& coeff(int i) const { return c.at(static_cast<size_t>(i)); }
};

// Rising factorial a (a+1) ... (a+k-1); empty product for k = 0.
Rational pochhammer(const Rational& a, int k);

// Coefficients b_i = 1 / (4^i i! (d/2)_i) of the normalized radial
// eigenfunction profile, i = 0..order. b_0 = 1 for every d.
EvenSeries beta_norm_coeffs(int d, int order);

// Multiplicative inverse of an even series with invertible constant term,
// truncated at the same order.
EvenSeries invert_series(const EvenSeries& s);

// alpha series: the inverse of beta_norm_coeffs. alpha_0 = 1,
// alpha_1 = -1/(2d).
EvenSeries alpha_coeffs(int d, int order);

// Asserts that the Cauchy product of alpha and b is 1, 0, 0, ... through the
// stated order. Exact check, residual stays empty.
CheckReport convolution_check(int d, int order);

// Double evaluation of the normalized profile at t >= 0. Requires the first
// omitted term to be below 1e-14 in magnitude relative to the value, else
// throws std::domain_error.
double normalized_bessel_value(int d, double t, int order);

// Evaluate sum of c[i] * t^{2i} in double precision, no truncation guard.
double eval_even_series(const EvenSeries& s, double t);

// One record per coefficient: {"d": ..., "i": ..., "num": "...", "den": "..."}.
ordered_json coeffs_to_json(const EvenSeries& s);

// CSV with header d,i,num,den.
std::string coeffs_to_csv(const EvenSeries& s);

}  // namespace mvp
