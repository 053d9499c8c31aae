#include "mvp/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mvp/rng.hpp"

namespace mvp {

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

Rational MultiPoly::value_at_origin() const {
    Exponents zero(static_cast<size_t>(dim), 0);
    auto it = terms.find(zero);
    return it == terms.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != dim)
        throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (dim != o.dim)
        throw std::invalid_argument("MultiPoly: dimension mismatch");
    for (const auto& [e, c] : o.terms)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (dim != o.dim)
        throw std::invalid_argument("MultiPoly: dimension mismatch");
    for (const auto& [e, c] : o.terms)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [e, v] : terms)
        v *= c;
    return *this;
}

std::string MultiPoly::str() const {
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first)
            os << " + ";
        first = false;
        os << c.str();
        bool any = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            os << (any ? " " : " * ");
            any = true;
            os << "x" << (i + 1);
            if (e[i] != 1)
                os << "^" << e[i];
        }
    }
    return os.str();
}

MultiPoly laplacian(const MultiPoly& f) {
    MultiPoly out;
    out.dim = f.dim;
    for (const auto& [e, c] : f.terms) {
        for (int i = 0; i < f.dim; ++i) {
            int ei = e[static_cast<size_t>(i)];
            if (ei < 2)
                continue;
            Exponents e2 = e;
            e2[static_cast<size_t>(i)] -= 2;
            out.add_term(e2, c * Rational(static_cast<long>(ei) * (ei - 1)));
        }
    }
    return out;
}

MultiPoly laplacian_power(const MultiPoly& f, int n) {
    if (n < 0)
        throw std::invalid_argument("laplacian_power: negative order");
    MultiPoly g = f;
    for (int i = 0; i < n; ++i)
        g = laplacian(g);
    return g;
}

namespace {

// One '+'-separated term: rational coefficient, then optional '*' and
// variable factors.
void parse_term(const std::string& term, MultiPoly& out) {
    std::istringstream is(term);
    std::string tok;
    if (!(is >> tok))
        throw std::invalid_argument("parse_multipoly: empty term");
    Rational coeff = Rational::parse(tok);
    Exponents e(static_cast<size_t>(out.dim), 0);
    bool saw_star = false;
    while (is >> tok) {
        if (tok == "*") {
            if (saw_star)
                throw std::invalid_argument("parse_multipoly: repeated '*'");
            saw_star = true;
            continue;
        }
        if (tok.empty() || tok[0] != 'x')
            throw std::invalid_argument("parse_multipoly: expected variable, got '" + tok + "'");
        auto caret = tok.find('^');
        std::string idx_s = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        int idx = std::stoi(idx_s);
        if (idx < 1 || idx > out.dim)
            throw std::invalid_argument("parse_multipoly: variable x" + idx_s + " out of range");
        int pow = 1;
        if (caret != std::string::npos)
            pow = std::stoi(tok.substr(caret + 1));
        if (pow < 0)
            throw std::invalid_argument("parse_multipoly: negative exponent");
        e[static_cast<size_t>(idx - 1)] += pow;
    }
    out.add_term(e, coeff);
}

void enumerate_exponents(int dim, int budget, Exponents& cur, std::vector<Exponents>& out) {
    if (static_cast<int>(cur.size()) == dim) {
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= budget; ++e) {
        cur.push_back(e);
        enumerate_exponents(dim, budget - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

MultiPoly parse_multipoly(const std::string& text, int dim) {
    if (dim < 1)
        throw std::invalid_argument("parse_multipoly: dimension must be >= 1");
    MultiPoly out;
    out.dim = dim;
    size_t start = 0;
    while (start <= text.size()) {
        size_t plus = text.find('+', start);
        std::string piece = text.substr(start, plus == std::string::npos ? std::string::npos
                                                                         : plus - start);
        if (piece.find_first_not_of(" \t\n") != std::string::npos)
            parse_term(piece, out);
        if (plus == std::string::npos)
            break;
        start = plus + 1;
    }
    return out;
}

MultiPoly random_multipoly(int dim, int max_degree, std::mt19937_64& eng) {
    std::vector<Exponents> all;
    Exponents cur;
    enumerate_exponents(dim, max_degree, cur, all);
    MultiPoly out;
    out.dim = dim;
    for (const Exponents& e : all) {
        if (eng() % 2 == 0)
            continue;
        out.add_term(e, random_nonzero_rational(eng));
    }
    return out;
}

}  // namespace mvp
