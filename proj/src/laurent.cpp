#include "mvp/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace mvp {

void LaurentPoly::add_term(int e, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms)
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c.is_zero())
        return r;
    for (const auto& [e, v] : terms)
        r.terms[e] = v * c;
    return r;
}

std::string LaurentPoly::str() const {
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first)
            os << " + ";
        first = false;
        os << c.str();
        if (e != 0)
            os << " x^" << e;
    }
    return os.str();
}

LaurentPoly make_D(long n, long q) {
    if (q < 2)
        throw std::invalid_argument("make_D: q must be >= 2");
    LaurentPoly p;
    long m = n < 0 ? -n : n;
    // x^n + q^n x^{-n}; for negative n this is (x^m + q^m x^{-m}) / q^m.
    Rational qn = rat_pow(Rational(q), n);
    p.add_term(static_cast<int>(n), Rational(1));
    p.add_term(static_cast<int>(-n), qn);
    if (m == 0) {
        p.terms.clear();
        p.add_term(0, Rational(2));
    }
    return p;
}

LaurentPoly make_S(int n, long q) {
    if (q < 2)
        throw std::invalid_argument("make_S: q must be >= 2");
    if (n < 0)
        throw std::invalid_argument("make_S: n must be >= 0");
    LaurentPoly s1;
    // (x-1)(x-q) / ((q+1)x) = x/(q+1) - 1 + q/((q+1)x)
    s1.add_term(1, Rational(1, q + 1));
    s1.add_term(0, Rational(-1));
    s1.add_term(-1, Rational(q, q + 1));
    LaurentPoly r;
    r.add_term(0, Rational(1));
    for (int i = 0; i < n; ++i)
        r = r * s1;
    return r;
}

std::vector<Rational> decompose_in_S(const LaurentPoly& p, long q) {
    int m = 0;
    for (const auto& [e, c] : p.terms)
        m = std::max(m, std::abs(e));
    std::vector<LaurentPoly> S(static_cast<size_t>(m) + 1);
    S[0].add_term(0, Rational(1));
    LaurentPoly s1 = make_S(1, q);
    for (int i = 1; i <= m; ++i)
        S[static_cast<size_t>(i)] = S[static_cast<size_t>(i - 1)] * s1;

    LaurentPoly rem = p;
    std::vector<Rational> row(static_cast<size_t>(m) + 1, Rational(0));
    // S_i has leading coefficient (q+1)^{-i} at x^i; strip from the top.
    // The negative side must then cancel on its own, or p is outside the span.
    for (int i = m; i >= 0; --i) {
        Rational lead = rem.coeff(i);
        Rational ai = lead * Rational(int_pow(q + 1, static_cast<unsigned long>(i)));
        row[static_cast<size_t>(i)] = ai;
        rem -= S[static_cast<size_t>(i)].scaled(ai);
    }
    if (!rem.is_zero())
        throw std::logic_error("decompose_in_S: input outside the S span");
    return row;
}

std::vector<Rational> decompose_D(long n, long q) {
    long m = n < 0 ? -n : n;
    if (m > 1000000)
        throw std::invalid_argument("decompose_D: n out of range");
    return decompose_in_S(make_D(n, q), q);
}

Rational CoeffTable::a(long n, int k) const {
    long m = n < 0 ? -n : n;
    if (m > nmax || k < 0 || k > m)
        throw std::out_of_range("CoeffTable: index out of range");
    const Rational& v = rows[static_cast<size_t>(m)][static_cast<size_t>(k)];
    if (n >= 0)
        return v;
    return v / Rational(int_pow(q, static_cast<unsigned long>(m)));
}

CoeffTable CoeffTable::build(long q, int nmax) {
    CoeffTable t;
    t.q = q;
    t.nmax = nmax;
    t.rows.reserve(static_cast<size_t>(nmax) + 1);
    for (long n = 0; n <= nmax; ++n)
        t.rows.push_back(decompose_D(n, q));
    return t;
}

CoeffTable CoeffTable::build_by_recurrence(long q, int nmax) {
    CoeffTable t;
    t.q = q;
    t.nmax = nmax;
    t.rows.resize(static_cast<size_t>(nmax) + 1);
    t.rows[0] = {Rational(2)};
    if (nmax >= 1)
        t.rows[1] = {Rational(1 + q), Rational(q + 1)};
    // Forward form of the three-term recurrences:
    // a_{n+1,0} = (q+1) a_{n,0} - q a_{n-1,0}
    // a_{n+1,i} = (q+1) a_{n,i-1} + (q+1) a_{n,i} - q a_{n-1,i}
    // a_{n+1,n+1} = (q+1) a_{n,n}
    Rational Q(q), Q1(q + 1);
    for (long n = 1; n < nmax; ++n) {
        const auto& prev = t.rows[static_cast<size_t>(n - 1)];
        const auto& cur = t.rows[static_cast<size_t>(n)];
        std::vector<Rational> next(static_cast<size_t>(n) + 2, Rational(0));
        next[0] = Q1 * cur[0] - Q * prev[0];
        for (long i = 1; i <= n; ++i) {
            Rational v = Q1 * cur[static_cast<size_t>(i - 1)] + Q1 * cur[static_cast<size_t>(i)];
            if (i <= n - 1)
                v -= Q * prev[static_cast<size_t>(i)];
            next[static_cast<size_t>(i)] = v;
        }
        next[static_cast<size_t>(n + 1)] = Q1 * cur[static_cast<size_t>(n)];
        t.rows[static_cast<size_t>(n + 1)] = std::move(next);
    }
    return t;
}

std::string coeff_table_csv(const CoeffTable& t) {
    std::ostringstream os;
    os << "q,n,k,num,den\n";
    for (long n = -t.nmax; n <= t.nmax; ++n) {
        long m = n < 0 ? -n : n;
        for (int k = 0; k <= m; ++k) {
            Rational v = t.a(n, k);
            os << t.q << "," << n << "," << k << "," << v.num_str() << "," << v.den_str() << "\n";
        }
    }
    return os.str();
}

CheckReport recurrence_check(long n, int i, long q) {
    CheckReport rep;
    rep.check = "recurrence";
    rep.params["n"] = n;
    rep.params["i"] = i;
    rep.params["q"] = q;
    long m = (n < 0 ? -n : n) + 1;
    CoeffTable t = CoeffTable::build(q, static_cast<int>(m));
    auto entry = [&](long nn, int kk) {
        long mm = nn < 0 ? -nn : nn;
        return kk <= mm ? t.a(nn, kk) : Rational(0);
    };
    Rational comb = entry(n + 1, i) - Rational(q + 1) * entry(n, i) + Rational(q) * entry(n - 1, i);
    if (i == 0) {
        rep.pass = comb.is_zero();
    } else {
        rep.pass = (entry(n, i - 1) == comb / Rational(q + 1));
    }
    if (!rep.pass)
        rep.params["combination"] = comb.str();
    return rep;
}

CheckReport linear_form_check(int k, long n, long q) {
    CheckReport rep;
    rep.check = "linear_form";
    rep.params["k"] = k;
    rep.params["n"] = n;
    rep.params["q"] = q;
    long reach = (n < 0 ? -n : n) + k + 1;
    CoeffTable t = CoeffTable::build(q, static_cast<int>(reach));
    LaurentPoly s = make_S(k + 1, q);
    Rational acc(0);
    for (int i = -(k + 1); i <= k + 1; ++i) {
        long row = n + i;
        long m = row < 0 ? -row : row;
        Rational av = (k <= m) ? t.a(row, k) : Rational(0);
        acc += s.coeff(i) * av;
    }
    rep.pass = acc.is_zero();
    if (!rep.pass)
        rep.params["value"] = acc.str();
    return rep;
}

Rational GammaPoly::eval(long n) const {
    Rational acc(0);
    Rational x(n);
    for (const Rational& c : coeffs)
        acc = acc * x + c;
    return acc;
}

ordered_json GammaPoly::to_json() const {
    ordered_json j;
    j["k"] = k;
    j["q"] = q;
    ordered_json arr = ordered_json::array();
    for (const Rational& c : coeffs)
        arr.push_back(c.str());
    j["coeffs"] = arr;
    return j;
}

std::vector<Rational> solve_linear_exact(std::vector<std::vector<Rational>> A,
                                         std::vector<Rational> b) {
    size_t n = A.size();
    if (b.size() != n)
        throw std::invalid_argument("solve_linear_exact: shape mismatch");
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col].is_zero())
            ++piv;
        if (piv == n)
            throw std::domain_error("solve_linear_exact: singular matrix");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        Rational inv = A[col][col].inverse();
        for (size_t j = col; j < n; ++j)
            A[col][j] *= inv;
        b[col] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col].is_zero())
                continue;
            Rational f = A[row][col];
            for (size_t j = col; j < n; ++j)
                A[row][j] -= f * A[col][j];
            b[row] -= f * b[col];
        }
    }
    return b;
}

GammaPoly solve_gamma(int k, long q) {
    if (k < 0)
        throw std::invalid_argument("solve_gamma: k must be >= 0");
    if (q < 2)
        throw std::invalid_argument("solve_gamma: q must be >= 2");
    GammaPoly g;
    g.k = k;
    g.q = q;
    if (k == 0) {
        // The decomposition forces a_{n,0} = 1 + q^n, i.e. gamma_0 = 1.
        g.coeffs = {Rational(1)};
        return g;
    }
    // Unknowns c_{k,k}..c_{k,0}; row j encodes gamma_k(j) + q^j gamma_k(-j),
    // whose coefficient at c_{k,m} is j^m (1 + (-1)^m q^j). Row 0 is
    // 2 c_{k,0} = 0; the last row equals 1 instead of 0.
    size_t sz = static_cast<size_t>(k) + 1;
    std::vector<std::vector<Rational>> A(sz, std::vector<Rational>(sz, Rational(0)));
    std::vector<Rational> rhs(sz, Rational(0));
    A[0][static_cast<size_t>(k)] = Rational(2);
    for (int j = 1; j <= k; ++j) {
        Rational qj(int_pow(q, static_cast<unsigned long>(j)));
        for (int m = k; m >= 0; --m) {
            Rational jm(int_pow(j, static_cast<unsigned long>(m)));
            Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
            A[static_cast<size_t>(j)][static_cast<size_t>(k - m)] =
                jm * (Rational(1) + sign * qj);
        }
    }
    rhs[static_cast<size_t>(k)] = Rational(1);
    g.coeffs = solve_linear_exact(std::move(A), std::move(rhs));
    return g;
}

Rational closed_form_a(long n, const GammaPoly& g) {
    Rational qn = rat_pow(Rational(g.q), n);
    Rational base = g.eval(n) + qn * g.eval(-n);
    return Rational(int_pow(g.q + 1, static_cast<unsigned long>(g.k))) * base;
}

Rational closed_form_a(long n, int k, long q) {
    return closed_form_a(n, solve_gamma(k, q));
}

Rational PolyPair::eval_P(long n) const {
    Rational acc(0), x(n), p(1);
    for (const Rational& c : P) {
        acc += c * p;
        p *= x;
    }
    return acc;
}

Rational PolyPair::eval_Phat(long n) const {
    Rational acc(0), x(n), p(1);
    for (const Rational& c : Phat) {
        acc += c * p;
        p *= x;
    }
    return acc;
}

PolyPair fit_P(int k, long q, int nmax) {
    if (k < 0)
        throw std::invalid_argument("fit_P: k must be >= 0");
    if (nmax < 3 * k + 2)
        throw std::invalid_argument("fit_P: need rows up to n >= 3k+2");
    CoeffTable t = CoeffTable::build(q, nmax);

    // a_{n,k} = sum_j P_j n^j + q^n sum_j Phat_j n^j over samples
    // n = k..3k+1: a square system in the 2k+2 unknowns. The window of
    // consecutive n makes it nonsingular (the sequence satisfies a linear
    // recursion with characteristic roots 1 and q, multiplicity k+1 each).
    size_t unknowns = 2 * static_cast<size_t>(k) + 2;
    std::vector<std::vector<Rational>> A(unknowns, std::vector<Rational>(unknowns));
    std::vector<Rational> rhs(unknowns);
    for (size_t s = 0; s < unknowns; ++s) {
        long n = k + static_cast<long>(s);
        Rational qn(int_pow(q, static_cast<unsigned long>(n)));
        Rational p(1), x(n);
        for (size_t j = 0; j <= static_cast<size_t>(k); ++j) {
            A[s][j] = p;
            A[s][static_cast<size_t>(k) + 1 + j] = qn * p;
            p *= x;
        }
        rhs[s] = t.a(n, k);
    }
    std::vector<Rational> sol = solve_linear_exact(std::move(A), std::move(rhs));

    PolyPair pp;
    pp.k = k;
    pp.q = q;
    pp.P.assign(sol.begin(), sol.begin() + k + 1);
    pp.Phat.assign(sol.begin() + k + 1, sol.end());

    // Held-out rows confirm the fit is the actual closed form.
    for (long n = 3 * k + 2; n <= nmax; ++n) {
        Rational qn(int_pow(q, static_cast<unsigned long>(n)));
        if (pp.eval_P(n) + qn * pp.eval_Phat(n) != t.a(n, k))
            throw std::logic_error("fit_P: validation row mismatch");
    }
    // Structural identities: Phat(-n) = P(n), the diagonal value, and the
    // values at 0 and 1 pinned by the closed form.
    for (size_t j = 0; j < pp.P.size(); ++j) {
        Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
        if (pp.Phat[j] != sign * pp.P[j])
            throw std::logic_error("fit_P: mirror symmetry violated");
    }
    Rational diag = pp.eval_P(k) + Rational(int_pow(q, static_cast<unsigned long>(k))) * pp.eval_P(-k);
    // k = 0 is the base row: a_{0,0} = 2, not (q+1)^0.
    Rational diag_want = (k == 0) ? Rational(2)
                                  : Rational(int_pow(q + 1, static_cast<unsigned long>(k)));
    if (diag != diag_want)
        throw std::logic_error("fit_P: diagonal identity violated");
    if (k > 0 && !pp.eval_P(0).is_zero())
        throw std::logic_error("fit_P: P_k(0) must vanish for k > 0");
    if (k == 0 && !pp.eval_P(1).is_one())
        throw std::logic_error("fit_P: P_0 must be the constant 1");
    return pp;
}

}  // namespace mvp
