// Exact rational arithmetic over arbitrary-precision integers.
//
// Rational is the coefficient field for everything in this library. Values
// are kept canonical at all times: lowest terms, positive denominator, zero
// stored as 0/1. GMP does the heavy lifting; this wrapper pins down the
// canonical-form guarantees, the "p/q" text format, and the conversions the
// rest of the library needs.

#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ordo {

using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long int>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    // Accepts "p", "p/q", optional leading '-'.
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(Integer(text));
            Integer num(text.substr(0, slash));
            Integer den(text.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            return Rational(num, den);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
        }
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Exact only when is_integer(); callers check first.
    Integer as_integer() const {
        if (!is_integer()) throw std::domain_error("Rational: " + to_string() + " is not an integer");
        return v_.get_num();
    }

    double to_double() const { return v_.get_d(); }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Rational: 0 to a negative power");
            return Rational(0);
        }
        mpq_class base = e < 0 ? mpq_class(1 / v_) : v_;
        unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), n);
        mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), n);
        mpq_class r(num, den); // already canonical: base was canonical
        return Rational(std::move(r));
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline std::complex<double> to_complex(const Rational& r) { return {r.to_double(), 0.0}; }

} // namespace ordo
