#include "mvp/even_series.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mvp {

Rational pochhammer(const Rational& a, int k) {
    if (k < 0)
        throw std::invalid_argument("pochhammer: negative length");
    Rational r(1);
    Rational f = a;
    for (int i = 0; i < k; ++i) {
        r *= f;
        f += Rational(1);
    }
    return r;
}

EvenSeries beta_norm_coeffs(int d, int order) {
    if (d < 1)
        throw std::invalid_argument("beta_norm_coeffs: dimension must be >= 1");
    if (order < 0)
        throw std::invalid_argument("beta_norm_coeffs: negative order");
    EvenSeries s;
    s.dim = d;
    s.c.reserve(static_cast<size_t>(order) + 1);
    Rational half_d(d, 2);
    for (int i = 0; i <= order; ++i) {
        // 4^i i! (d/2)_i is a positive rational; b_i is its inverse.
        Rational denom = Rational(int_pow(4, static_cast<unsigned long>(i)))
                       * Rational(factorial(static_cast<unsigned long>(i)))
                       * pochhammer(half_d, i);
        s.c.push_back(denom.inverse());
    }
    return s;
}

EvenSeries invert_series(const EvenSeries& s) {
    if (s.c.empty())
        throw std::invalid_argument("invert_series: empty series");
    if (s.c[0].is_zero())
        throw std::domain_error("invert_series: constant term is zero");
    EvenSeries t;
    t.dim = s.dim;
    t.c.assign(s.c.size(), Rational(0));
    Rational c0inv = s.c[0].inverse();
    t.c[0] = c0inv;
    // Triangular recurrence: t_k = -(1/s_0) * sum_{i=1}^{k} s_i t_{k-i}.
    for (size_t k = 1; k < s.c.size(); ++k) {
        Rational acc(0);
        for (size_t i = 1; i <= k; ++i)
            acc += s.c[i] * t.c[k - i];
        t.c[k] = -c0inv * acc;
    }
    return t;
}

EvenSeries alpha_coeffs(int d, int order) {
    return invert_series(beta_norm_coeffs(d, order));
}

CheckReport convolution_check(int d, int order) {
    CheckReport rep;
    rep.check = "convolution";
    rep.params["d"] = d;
    rep.params["order"] = order;
    EvenSeries b = beta_norm_coeffs(d, order);
    EvenSeries a = alpha_coeffs(d, order);
    rep.pass = true;
    for (int k = 0; k <= order; ++k) {
        Rational conv(0);
        for (int i = 0; i <= k; ++i)
            conv += a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(k - i)];
        Rational want = (k == 0) ? Rational(1) : Rational(0);
        if (conv != want) {
            rep.pass = false;
            rep.params["first_bad_index"] = k;
            break;
        }
    }
    return rep;
}

double eval_even_series(const EvenSeries& s, double t) {
    double t2 = t * t;
    double acc = 0.0;
    double p = 1.0;
    for (const Rational& ci : s.c) {
        acc += ci.to_double() * p;
        p *= t2;
    }
    return acc;
}

double normalized_bessel_value(int d, double t, int order) {
    if (t < 0.0)
        throw std::invalid_argument("normalized_bessel_value: t must be >= 0");
    EvenSeries b = beta_norm_coeffs(d, order + 1);
    double value = 0.0;
    double p = 1.0;
    double t2 = t * t;
    for (int i = 0; i <= order; ++i) {
        value += b.c[static_cast<size_t>(i)].to_double() * p;
        p *= t2;
    }
    double tail = std::fabs(b.c[static_cast<size_t>(order + 1)].to_double() * p);
    // The series alternates with factorially shrinking terms, so the first
    // omitted term bounds the truncation error.
    if (tail > 1e-14 * std::max(1.0, std::fabs(value)))
        throw std::domain_error("normalized_bessel_value: order too small for requested t");
    return value;
}

ordered_json coeffs_to_json(const EvenSeries& s) {
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < s.c.size(); ++i) {
        ordered_json rec;
        rec["d"] = s.dim;
        rec["i"] = i;
        rec["num"] = s.c[i].num_str();
        rec["den"] = s.c[i].den_str();
        arr.push_back(rec);
    }
    return arr;
}

std::string coeffs_to_csv(const EvenSeries& s) {
    std::ostringstream os;
    os << "d,i,num,den\n";
    for (size_t i = 0; i < s.c.size(); ++i)
        os << s.dim << "," << i << "," << s.c[i].num_str() << "," << s.c[i].den_str() << "\n";
    return os.str();
}

}  // namespace mvp
