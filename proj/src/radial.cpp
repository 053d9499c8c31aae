#include "mvp/radial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mvp {

void RadialProfile::add_coeff(int power, const Rational& c) {
    if (power < 0)
        throw std::invalid_argument("RadialProfile: negative power");
    if (c.is_zero())
        return;
    if (power >= static_cast<int>(coeffs.size()))
        coeffs.resize(static_cast<size_t>(power) + 1, Rational(0));
    coeffs[static_cast<size_t>(power)] += c;
    trim();
}

void RadialProfile::trim() {
    while (!coeffs.empty() && coeffs.back().is_zero())
        coeffs.pop_back();
}

RadialProfile& RadialProfile::operator+=(const RadialProfile& o) {
    if (o.coeffs.size() > coeffs.size())
        coeffs.resize(o.coeffs.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs.size(); ++i)
        coeffs[i] += o.coeffs[i];
    trim();
    return *this;
}

std::string RadialProfile::str() const {
    if (coeffs.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << coeffs[i].str();
        if (i > 0)
            os << " r^" << i;
    }
    return os.str();
}

RadialPoly RadialPoly::monomial(int power, const Rational& c) {
    RadialPoly g;
    if (c.is_zero())
        return g;
    g.shift = power;
    g.coeffs = {c};
    return g;
}

RadialPoly RadialPoly::from_terms(const std::map<int, Rational>& terms) {
    RadialPoly g;
    int lo = 0, hi = 0;
    bool any = false;
    for (const auto& [p, c] : terms) {
        if (c.is_zero())
            continue;
        if (!any) {
            lo = hi = p;
            any = true;
        } else {
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
    }
    if (!any)
        return g;
    g.shift = lo;
    g.coeffs.assign(static_cast<size_t>(hi - lo) + 1, Rational(0));
    for (const auto& [p, c] : terms)
        if (!c.is_zero())
            g.coeffs[static_cast<size_t>(p - lo)] = c;
    return g;
}

std::map<int, Rational> RadialPoly::terms() const {
    std::map<int, Rational> out;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero())
            out[shift + static_cast<int>(i)] = coeffs[i];
    return out;
}

RadialPoly& RadialPoly::operator+=(const RadialPoly& o) {
    auto t = terms();
    for (const auto& [p, c] : o.terms()) {
        t[p] += c;
        if (t[p].is_zero())
            t.erase(p);
    }
    *this = from_terms(t);
    return *this;
}

RadialPoly RadialPoly::scaled(const Rational& c) const {
    if (c.is_zero())
        return RadialPoly{};
    RadialPoly g = *this;
    for (auto& v : g.coeffs)
        v *= c;
    return g;
}

RadialPoly RadialPoly::shifted(int dpow) const {
    if (is_zero())
        return *this;
    RadialPoly g = *this;
    g.shift += dpow;
    return g;
}

std::string RadialPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << c.str();
        if (p != 0)
            os << " x^" << p;
    }
    return os.str();
}

Rational sphere_avg_monomial(const Exponents& exps, int d) {
    if (static_cast<int>(exps.size()) != d)
        throw std::invalid_argument("sphere_avg_monomial: arity mismatch");
    long total = 0;
    for (int e : exps) {
        if (e < 0)
            throw std::invalid_argument("sphere_avg_monomial: negative exponent");
        if (e % 2 == 1)
            return Rational(0);
        total += e;
    }
    // rho = prod_i (e_i - 1)!! / (d (d+2) ... (d+2M-2)), M = total/2.
    mpz_class num(1);
    for (int e : exps)
        for (int j = e - 1; j >= 1; j -= 2)
            num *= j;
    mpz_class den(1);
    long M = total / 2;
    for (long m = 0; m < M; ++m)
        den *= (d + 2 * m);
    return Rational(num, den);
}

RadialProfile sphere_avg(const MultiPoly& f) {
    RadialProfile p;
    for (const auto& [e, c] : f.terms) {
        Rational rho = sphere_avg_monomial(e, f.dim);
        if (rho.is_zero())
            continue;
        int total = std::accumulate(e.begin(), e.end(), 0);
        p.add_coeff(total, c * rho);
    }
    return p;
}

RadialPoly radial_from_profile(const RadialProfile& p, int d) {
    std::map<int, Rational> t;
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        if (!p.coeffs[i].is_zero())
            t[static_cast<int>(i) + d - 1] = p.coeffs[i];
    return RadialPoly::from_terms(t);
}

RadialPoly radial_delta(const RadialPoly& g, int d) {
    if (d < 1)
        throw std::invalid_argument("radial_delta: dimension must be >= 1");
    if (!g.is_zero() && g.shift < d - 1)
        throw std::domain_error("radial_delta: operand not divisible by x^(d-1)");
    std::map<int, Rational> out;
    for (const auto& [n, c] : g.terms()) {
        Rational factor(static_cast<long>(n - d + 1) * (n - 1));
        if (factor.is_zero())
            continue;
        out[n - 2] += c * factor;
    }
    return RadialPoly::from_terms(out);
}

}  // namespace mvp
