#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <iosfwd>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mvp {

// Exact rational scalar backed by GMP. Canonical at all times: lowest terms,
// positive denominator, never rounded.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0)
            throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(mpz_class(n), mpz_class(d));
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (sgn(d) == 0)
            throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p", "p/q", optional leading '-', decimal digits only.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(mpz_class(s));
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            return Rational(num, den);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }
    std::string str() const {
        if (v_.get_den() == 1)
            return num_str();
        return num_str() + "/" + den_str();
    }
    double to_double() const { return v_.get_d(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational inverse() const {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

  private:
    mpq_class v_;
};

// base^e for integer e of either sign.
inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0)
        return Rational(1);
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    Rational r(n, d);
    return neg ? r.inverse() : r;
}

// q^n as an exact integer, n >= 0.
inline mpz_class int_pow(long base, unsigned long e) {
    mpz_class r;
    mpz_class b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace mvp
