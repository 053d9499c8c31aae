#pragma once

#include "mvp/even_series.hpp"
#include "mvp/multipoly.hpp"
#include "mvp/radial.hpp"
#include "mvp/report.hpp"

namespace mvp {

// Sum_{i<=N} alpha_{i,d} x^{2i} RadialDelta^i applied to x^{2k+d-1} must be
// x^{d-1} for k = 0 and 0 for k >= 1. Requires N >= k; the sum is finite
// because the (k+1)-st application annihilates the monomial.
CheckReport annihilation_check(int k, int d, int order);

// With I_g(x) = x^{d-1} * sphere_avg(g)(x): asserts I_{laplacian(f)} equals
// radial_delta(I_f, d) exactly. iterations > 1 checks the n-fold version.
CheckReport commuting_check(const MultiPoly& f, int d, int iterations = 1);

// Asserts sphere_avg( sum_i alpha_{i,d} r^{2i} laplacian^i f ) is the
// constant f(0) as an exact polynomial identity in r.
CheckReport mvp_check(const MultiPoly& f, int d);

// Numeric counterpart on radial eigenfunctions: the profile value times the
// truncated alpha series at t must be 1. Reports divergence (growing terms)
// instead of a residual when t lies beyond the alpha series' radius.
CheckReport eigen_product_check(int d, double t, int order, double tol = 1e-10);

}  // namespace mvp
