// Truncated univariate formal power series with exact rational coefficients.
//
// A Series carries its coefficients for x^0..x^order together with the
// truncation order itself: coefficients up to `order` are exact, everything
// beyond is unknown. Every operation propagates the truncation order
// pessimistically (the result order is the minimum of what the inputs can
// support), so a coefficient you can read out of a Series is always a true
// coefficient of the underlying infinite series.
//
// All values are immutable after construction and all operations are pure;
// sharing across threads is safe.

#pragma once

#include "ordo/rational.hpp"

#include <algorithm>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordo {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisionByNonUnit : SeriesError {
    using SeriesError::SeriesError;
};
struct CompositionNonNilpotent : SeriesError {
    using SeriesError::SeriesError;
};
struct ReversionNotDefined : SeriesError {
    using SeriesError::SeriesError;
};
struct ExpOfUnit : SeriesError {
    using SeriesError::SeriesError;
};
struct LogOfNonUnit : SeriesError {
    using SeriesError::SeriesError;
};
struct SqrtOfNonUnit : SeriesError {
    using SeriesError::SeriesError;
};
struct OrderTooLow : SeriesError {
    using SeriesError::SeriesError;
};

class Series {
public:
    // Zero series at the given truncation order.
    explicit Series(int order) : c_(check_order(order) + 1) {}

    // Coefficients x^0..x^N; the truncation order is coeffs.size()-1.
    explicit Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("Series: empty coefficient vector");
    }

    static Series constant(const Rational& value, int order) {
        Series s(order);
        s.c_[0] = value;
        return s;
    }

    static Series one(int order) { return constant(Rational(1), order); }

    static Series x(int order) { return monomial(1, Rational(1), order); }

    static Series monomial(int k, const Rational& coeff, int order) {
        if (k < 0 || k > order) throw std::invalid_argument("Series::monomial: power out of range");
        Series s(order);
        s.c_[k] = coeff;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& coeff(int k) const {
        if (k < 0 || k > order()) throw std::out_of_range("Series::coeff: index beyond truncation order");
        return c_[static_cast<size_t>(k)];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
    }

    // Largest k with a nonzero coefficient, -1 if none up to the order.
    int top_degree() const {
        for (int k = order(); k >= 0; --k)
            if (!c_[static_cast<size_t>(k)].is_zero()) return k;
        return -1;
    }

    Series truncated(int new_order) const {
        if (new_order > order()) throw OrderTooLow("Series::truncated: cannot extend reliable order");
        return Series(std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
    }

    // Extend with zero coefficients. Only valid when the caller knows the
    // tail is exactly zero, i.e. the series is a polynomial of degree
    // <= order(). This is an assertion, not a computation.
    Series padded(int new_order) const {
        if (new_order < order()) return truncated(new_order);
        std::vector<Rational> c = c_;
        c.resize(static_cast<size_t>(new_order) + 1);
        return Series(std::move(c));
    }

    // Horner evaluation of the truncated polynomial part.
    Rational eval(const Rational& x0) const {
        Rational r;
        for (int k = order(); k >= 0; --k) r = r * x0 + c_[static_cast<size_t>(k)];
        return r;
    }

    std::complex<double> eval(const std::complex<double>& x0) const {
        std::complex<double> r = 0.0;
        for (int k = order(); k >= 0; --k) r = r * x0 + c_[static_cast<size_t>(k)].to_double();
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= order(); ++k) {
            const Rational& c = c_[static_cast<size_t>(k)];
            if (c.is_zero()) continue;
            Rational a = abs(c);
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            if (k == 0) {
                os << a.to_string();
            } else {
                if (a != Rational(1)) os << a.to_string() << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
        }
        if (first) os << "0";
        return os.str();
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("Series: negative truncation order");
        return order;
    }

    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.to_string(); }

inline Series operator+(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return Series(std::move(c));
}

inline Series operator-(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
    return Series(std::move(c));
}

inline Series operator-(const Series& a) {
    std::vector<Rational> c(a.coeffs());
    for (auto& r : c) r = -r;
    return Series(std::move(c));
}

inline Series operator*(const Rational& s, const Series& a) {
    std::vector<Rational> c(a.coeffs());
    for (auto& r : c) r = s * r;
    return Series(std::move(c));
}

inline Series operator*(const Series& a, const Rational& s) { return s * a; }

// Cauchy product truncated to the common reliable order.
inline Series mul(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return Series(std::move(c));
}

inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

// Long division: q with mul(q, b) == a through the common order.
inline Series div(const Series& a, const Series& b) {
    if (b.coeff(0).is_zero()) throw DivisionByNonUnit("div: divisor has zero constant term");
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> q(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational acc = a.coeff(k);
        for (int j = 0; j < k; ++j) {
            if (q[static_cast<size_t>(j)].is_zero()) continue;
            acc -= q[static_cast<size_t>(j)] * b.coeff(k - j);
        }
        q[static_cast<size_t>(k)] = acc / b.coeff(0);
    }
    return Series(std::move(q));
}

inline Series inv(const Series& s) { return div(Series::one(s.order()), s); }

// outer(inner) for inner with zero constant term.
inline Series compose(const Series& outer, const Series& inner) {
    if (!inner.coeff(0).is_zero())
        throw CompositionNonNilpotent("compose: inner series has nonzero constant term");
    const int n = std::min(outer.order(), inner.order());
    const Series in = inner.truncated(n);
    Series r = Series::constant(outer.coeff(n), n);
    for (int k = n - 1; k >= 0; --k) {
        r = mul(r, in);
        r = r + Series::constant(outer.coeff(k), n);
    }
    return r;
}

inline Series deriv(const Series& s) {
    if (s.order() < 1) throw OrderTooLow("deriv: order-0 series has no reliable derivative");
    std::vector<Rational> c(static_cast<size_t>(s.order()));
    for (int k = 1; k <= s.order(); ++k)
        c[static_cast<size_t>(k - 1)] = Rational(k) * s.coeff(k);
    return Series(std::move(c));
}

inline Series integrate(const Series& s) {
    std::vector<Rational> c(static_cast<size_t>(s.order()) + 2);
    for (int k = 0; k <= s.order(); ++k)
        c[static_cast<size_t>(k + 1)] = s.coeff(k) / Rational(k + 1);
    return Series(std::move(c));
}

inline Series exp(const Series& s) {
    if (!s.coeff(0).is_zero()) throw ExpOfUnit("exp: series has nonzero constant term");
    const int n = s.order();
    std::vector<Rational> e(static_cast<size_t>(n) + 1);
    e[0] = Rational(1);
    // n e_n = sum_{k=1..n} k s_k e_{n-k}
    for (int m = 1; m <= n; ++m) {
        Rational acc;
        for (int k = 1; k <= m; ++k) {
            if (s.coeff(k).is_zero()) continue;
            acc += Rational(k) * s.coeff(k) * e[static_cast<size_t>(m - k)];
        }
        e[static_cast<size_t>(m)] = acc / Rational(m);
    }
    return Series(std::move(e));
}

inline Series log(const Series& s) {
    if (s.coeff(0) != Rational(1)) throw LogOfNonUnit("log: series constant term is not 1");
    if (s.order() == 0) return Series(0);
    return integrate(div(deriv(s), s.truncated(s.order() - 1)));
}

inline Series pow(const Series& s, long e) {
    if (e < 0) return pow(inv(s), -e);
    Series r = Series::one(s.order());
    Series base = s;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1ul) r = mul(r, base);
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return r;
}

// s^p for arbitrary rational p; requires s(0) = 1.
inline Series pow(const Series& s, const Rational& p) {
    if (s.coeff(0) != Rational(1)) throw LogOfNonUnit("pow: rational power needs constant term 1");
    return exp(p * log(s));
}

inline Series sqrt(const Series& s) {
    if (s.coeff(0) != Rational(1)) throw SqrtOfNonUnit("sqrt: series constant term is not 1");
    return pow(s, Rational(1, 2));
}

// Taylor shift f(x+c). Treats f as the exact polynomial of degree <= order;
// a genuinely truncated series cannot be shifted (the unknown tail would
// contaminate every coefficient).
inline Series shift(const Series& f, const Rational& c) {
    const int n = f.order();
    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        if (f.coeff(m).is_zero()) continue;
        Rational cp(1);
        for (int k = m; k >= 0; --k) {
            out[static_cast<size_t>(k)] += f.coeff(m) * Rational(binomial(m, k)) * cp;
            cp = cp * c;
        }
    }
    return Series(std::move(out));
}

// Compositional inverse by the Lagrange inversion formula:
//   [x^n] revert(f) = (1/n) [x^{n-1}] (x/f)^n.
inline Series revert(const Series& f) {
    if (f.order() < 1) throw ReversionNotDefined("revert: order must be at least 1");
    if (!f.coeff(0).is_zero()) throw ReversionNotDefined("revert: f(0) != 0");
    if (f.coeff(1).is_zero()) throw ReversionNotDefined("revert: f'(0) = 0");
    const int n = f.order();
    std::vector<Rational> uc(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) uc[static_cast<size_t>(k - 1)] = f.coeff(k);
    const Series w = inv(Series(std::move(uc))); // (x/f)^1, order n-1
    std::vector<Rational> g(static_cast<size_t>(n) + 1);
    Series p = w;
    for (int m = 1; m <= n; ++m) {
        g[static_cast<size_t>(m)] = p.coeff(m - 1) / Rational(m);
        if (m < n) p = mul(p, w);
    }
    return Series(std::move(g));
}

// Elementary series of the plain variable, used to seed compositions.
namespace elementary {

inline Series exp_x(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    Rational f(1);
    for (int k = 0; k <= order; ++k) {
        c[static_cast<size_t>(k)] = f;
        f = f / Rational(k + 1);
    }
    return Series(std::move(c));
}

inline Series expm1_x(int order) { return exp_x(order) - Series::one(order); }

inline Series log1p_x(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int k = 1; k <= order; ++k)
        c[static_cast<size_t>(k)] = Rational(k % 2 == 1 ? 1 : -1, k);
    return Series(std::move(c));
}

inline Series sin_x(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    Rational f(1);
    for (int k = 1; k <= order; ++k) {
        f = f / Rational(k);
        if (k % 2 == 1) c[static_cast<size_t>(k)] = ((k / 2) % 2 == 0) ? f : -f;
    }
    return Series(std::move(c));
}

inline Series cos_x(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    c[0] = Rational(1);
    Rational f(1);
    for (int k = 1; k <= order; ++k) {
        f = f / Rational(k);
        if (k % 2 == 0) c[static_cast<size_t>(k)] = ((k / 2) % 2 == 0) ? f : -f;
    }
    return Series(std::move(c));
}

inline Series tan_x(int order) { return div(sin_x(order), cos_x(order)); }

inline Series sec_x(int order) { return inv(cos_x(order)); }

inline Series atan_x(int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int k = 1; k <= order; k += 2)
        c[static_cast<size_t>(k)] = Rational((k / 2) % 2 == 0 ? 1 : -1, k);
    return Series(std::move(c));
}

// Principal branch of Lambert W as a formal series: revert(x e^x).
inline Series lambert_w_x(int order) { return revert(mul(Series::x(order), exp_x(order))); }

} // namespace elementary

} // namespace ordo
