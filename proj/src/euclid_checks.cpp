#include "mvp/euclid_checks.hpp"

#include <cmath>
#include <sstream>

namespace mvp {

namespace {

std::string sci(double x) {
    std::ostringstream os;
    os.precision(6);
    os << std::scientific << x;
    return os.str();
}

}  // namespace

CheckReport annihilation_check(int k, int d, int order) {
    if (order < k)
        throw std::invalid_argument("annihilation_check: order must be >= k");
    CheckReport rep;
    rep.check = "annihilation";
    rep.params["k"] = k;
    rep.params["d"] = d;
    rep.params["order"] = order;

    EvenSeries alpha = alpha_coeffs(d, order);
    RadialPoly g = RadialPoly::monomial(2 * k + d - 1);
    RadialPoly acc;
    for (int i = 0; i <= order; ++i) {
        if (i > 0)
            g = radial_delta(g, d);
        if (g.is_zero())
            break;
        acc += g.scaled(alpha.coeff(i)).shifted(2 * i);
    }
    RadialPoly want = (k == 0) ? RadialPoly::monomial(d - 1) : RadialPoly{};
    rep.pass = (acc == want);
    if (!rep.pass)
        rep.params["got"] = acc.str();
    return rep;
}

CheckReport commuting_check(const MultiPoly& f, int d, int iterations) {
    CheckReport rep;
    rep.check = "commuting";
    rep.params["d"] = d;
    rep.params["degree"] = f.total_degree();
    rep.params["iterations"] = iterations;
    if (f.dim != d)
        throw std::invalid_argument("commuting_check: dimension mismatch");

    RadialPoly lhs = radial_from_profile(sphere_avg(laplacian_power(f, iterations)), d);
    RadialPoly rhs = radial_from_profile(sphere_avg(f), d);
    for (int i = 0; i < iterations; ++i)
        rhs = radial_delta(rhs, d);
    rep.pass = (lhs == rhs);
    if (!rep.pass) {
        rep.params["avg_then_delta"] = rhs.str();
        rep.params["delta_then_avg"] = lhs.str();
    }
    return rep;
}

CheckReport mvp_check(const MultiPoly& f, int d) {
    CheckReport rep;
    rep.check = "mean_value";
    rep.params["d"] = d;
    rep.params["degree"] = f.total_degree();
    if (f.dim != d)
        throw std::invalid_argument("mvp_check: dimension mismatch");

    int max_i = f.total_degree() / 2 + 1;
    EvenSeries alpha = alpha_coeffs(d, std::max(max_i, 1));
    RadialProfile acc;
    MultiPoly g = f;
    for (int i = 0; i <= max_i; ++i) {
        if (i > 0)
            g = laplacian(g);
        if (g.is_zero())
            break;
        RadialProfile p = sphere_avg(g);
        // term alpha_i r^{2i} * avg(laplacian^i f)(r)
        for (size_t j = 0; j < p.coeffs.size(); ++j)
            acc.add_coeff(static_cast<int>(j) + 2 * i, alpha.coeff(i) * p.coeffs[j]);
    }
    Rational want = f.value_at_origin();
    rep.pass = true;
    for (size_t j = 0; j < acc.coeffs.size(); ++j) {
        Rational expect = (j == 0) ? want : Rational(0);
        if (acc.coeffs[j] != expect) {
            rep.pass = false;
            rep.params["offending_power"] = j;
            rep.params["coefficient"] = acc.coeffs[j].str();
            break;
        }
    }
    if (acc.coeffs.empty() && !want.is_zero())
        rep.pass = false;
    return rep;
}

CheckReport eigen_product_check(int d, double t, int order, double tol) {
    CheckReport rep;
    rep.check = "eigen_product";
    rep.params["d"] = d;
    rep.params["t"] = t;
    rep.params["order"] = order;

    EvenSeries alpha = alpha_coeffs(d, order);
    double t2 = t * t;
    std::vector<double> term(static_cast<size_t>(order) + 1);
    double p = 1.0;
    double sum = 0.0;
    for (int i = 0; i <= order; ++i) {
        term[static_cast<size_t>(i)] = alpha.coeff(i).to_double() * p;
        sum += term[static_cast<size_t>(i)];
        p *= t2;
    }

    // Terms of a convergent evaluation shrink toward the tail; growth past
    // the midpoint marks t beyond the series' radius.
    auto window_mag = [&](int center) {
        double m = 0.0;
        for (int i = std::max(0, center - 1); i <= std::min(order, center + 1); ++i)
            m = std::max(m, std::fabs(term[static_cast<size_t>(i)]));
        return m;
    };
    double tail = window_mag(order - 1);
    double mid = window_mag(order / 2);
    bool divergent = tail > mid && tail > 1e-12;
    rep.params["divergent"] = divergent;
    if (divergent) {
        rep.pass = false;
        return rep;
    }

    double lambda = normalized_bessel_value(d, std::fabs(t), std::max(order, 48));
    double residual = std::fabs(lambda * sum - 1.0);
    rep.residual = sci(residual);
    rep.pass = residual <= tol;
    return rep;
}

}  // namespace mvp
