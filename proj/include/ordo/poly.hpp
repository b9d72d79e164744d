// Dense exact-rational polynomials.
//
// Unlike Series, a Poly is a finished object: its coefficient list is the
// whole truth, so shifting, evaluating and differentiating are exact with no
// truncation bookkeeping. The Sheffer sequences and Bell polynomials live
// here.

#pragma once

#include "ordo/rational.hpp"
#include "ordo/series.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace ordo {

class Poly {
public:
    Poly() = default; // zero polynomial

    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Rational& v) { return Poly(std::vector<Rational>{v}); }

    static Poly x() { return monomial(1, Rational(1)); }

    static Poly monomial(int k, const Rational& coeff) {
        std::vector<Rational> c(static_cast<size_t>(k) + 1);
        c[static_cast<size_t>(k)] = coeff;
        return Poly(std::move(c));
    }

    // Every coefficient the series carries, trailing zeros dropped. Only
    // meaningful when the series is known to be a polynomial within its order.
    static Poly from_series(const Series& s) { return Poly(s.coeffs()); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero

    bool is_zero() const { return c_.empty(); }

    Rational coeff(int k) const {
        if (k < 0 || static_cast<size_t>(k) >= c_.size()) return Rational(0);
        return c_[static_cast<size_t>(k)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x0) const {
        Rational r;
        for (int k = degree(); k >= 0; --k) r = r * x0 + c_[static_cast<size_t>(k)];
        return r;
    }

    std::complex<double> eval(const std::complex<double>& x0) const {
        std::complex<double> r = 0.0;
        for (int k = degree(); k >= 0; --k) r = r * x0 + c_[static_cast<size_t>(k)].to_double();
        return r;
    }

    Poly deriv() const {
        if (degree() < 1) return Poly();
        std::vector<Rational> c(c_.size() - 1);
        for (int k = 1; k <= degree(); ++k)
            c[static_cast<size_t>(k - 1)] = Rational(k) * c_[static_cast<size_t>(k)];
        return Poly(std::move(c));
    }

    // Multiplication by x: the raising half of the monomial ladder.
    Poly mul_x() const {
        if (is_zero()) return Poly();
        std::vector<Rational> c(c_.size() + 1);
        for (size_t k = 0; k < c_.size(); ++k) c[k + 1] = c_[k];
        return Poly(std::move(c));
    }

    Series as_series(int order) const {
        if (order < degree()) throw OrderTooLow("Poly::as_series: order below degree");
        std::vector<Rational> c(static_cast<size_t>(order) + 1);
        for (size_t k = 0; k < c_.size(); ++k) c[k] = c_[k];
        return Series(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a) {
        std::vector<Rational> c(a.c_);
        for (auto& r : c) r = -r;
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    friend Poly operator*(const Rational& s, const Poly& a) {
        if (s.is_zero()) return Poly();
        std::vector<Rational> c(a.c_);
        for (auto& r : c) r = s * r;
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Rational& s) { return s * a; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        return as_series(degree()).to_string(var);
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// p(x+c), exact.
inline Poly taylor_shift(const Poly& p, const Rational& c) {
    if (p.is_zero()) return Poly();
    return Poly::from_series(shift(p.as_series(p.degree()), c));
}

} // namespace ordo
