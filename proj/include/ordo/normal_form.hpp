// Exact calculus of normally ordered boson operators.
//
// A NormalForm is a finite sum  sum_{i,j} c_{ij} a†^i a^j  with exact rational
// coefficients, stored sparsely with keys sorted by (i, j). Products are
// normally ordered on the fly through a single reordering kernel derived from
// [a, a†] = 1:
//
//   a^j a†^i = sum_k k! C(j,k) C(i,k) a†^{i-k} a^{j-k}
//
// Everything that rewrites commutators goes through that one formula. This
// module is the brute-force side of the book: the flow solver is checked
// against repeated products computed here.

#pragma once

#include "ordo/poly.hpp"
#include "ordo/rational.hpp"
#include "ordo/series.hpp"

#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordo {

struct NotLinear : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degrees of one normally ordered monomial a†^creation a^annihilation.
struct OpIndex {
    int creation = 0;
    int annihilation = 0;
    friend auto operator<=>(const OpIndex&, const OpIndex&) = default;
};

class NormalForm {
public:
    NormalForm() = default; // zero operator

    static NormalForm identity() { return single(0, 0, Rational(1)); }

    static NormalForm single(int i, int j, const Rational& c) {
        if (i < 0 || j < 0) throw std::invalid_argument("NormalForm: negative degree");
        NormalForm f;
        f.add_term({i, j}, c);
        return f;
    }

    static NormalForm creation(int power = 1) { return single(power, 0, Rational(1)); }
    static NormalForm annihilation(int power = 1) { return single(0, power, Rational(1)); }
    static NormalForm number() { return single(1, 1, Rational(1)); }

    const std::map<OpIndex, Rational>& terms() const { return terms_; }

    Rational coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int max_creation() const {
        int m = 0;
        for (const auto& [k, c] : terms_) m = std::max(m, k.creation);
        return m;
    }

    int max_annihilation() const {
        int m = 0;
        for (const auto& [k, c] : terms_) m = std::max(m, k.annihilation);
        return m;
    }

    NormalForm& operator+=(const NormalForm& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    NormalForm& operator-=(const NormalForm& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    friend NormalForm operator+(NormalForm a, const NormalForm& b) { a += b; return a; }
    friend NormalForm operator-(NormalForm a, const NormalForm& b) { a -= b; return a; }

    friend NormalForm operator*(const Rational& s, const NormalForm& a) {
        NormalForm r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, s * c);
        return r;
    }

    friend NormalForm operator*(const NormalForm& a, const Rational& s) { return s * a; }

    friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NormalForm& a, const NormalForm& b) { return !(a == b); }

    // Hermitian adjoint for real coefficients: a†^i a^j -> a†^j a^i.
    NormalForm conjugate() const {
        NormalForm r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(OpIndex{k.annihilation, k.creation}, c);
        return r;
    }

    // Double-dot substitution a† -> cdag, a -> ann (the coherent-state symbol).
    std::complex<double> substitute(const std::complex<double>& cdag,
                                    const std::complex<double>& ann) const {
        std::complex<double> r = 0.0;
        for (const auto& [k, c] : terms_) {
            std::complex<double> t = c.to_double();
            for (int p = 0; p < k.creation; ++p) t *= cdag;
            for (int p = 0; p < k.annihilation; ++p) t *= ann;
            r += t;
        }
        return r;
    }

    Rational substitute(const Rational& cdag, const Rational& ann) const {
        Rational r;
        for (const auto& [k, c] : terms_)
            r += c * cdag.pow(k.creation) * ann.pow(k.annihilation);
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Rational a = abs(c);
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            const bool unit = (a == Rational(1)) && (k.creation > 0 || k.annihilation > 0);
            if (!unit) os << a.to_string();
            bool need_sep = !unit;
            auto put = [&](const char* sym, int p) {
                if (p == 0) return;
                if (need_sep) os << " ";
                os << sym;
                if (p > 1) os << "^" << p;
                need_sep = true;
            };
            put("a†", k.creation);
            put("a", k.annihilation);
        }
        return os.str();
    }

private:
    void add_term(const OpIndex& k, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<OpIndex, Rational> terms_;

    friend NormalForm normal_product(const NormalForm&, const NormalForm&);
};

inline std::ostream& operator<<(std::ostream& os, const NormalForm& f) { return os << f.to_string(); }

// The reordering kernel: a^j a†^i as a NormalForm.
inline NormalForm reorder(int j, int i) {
    NormalForm r;
    const int kmax = std::min(i, j);
    for (int k = 0; k <= kmax; ++k) {
        Rational c(factorial(static_cast<unsigned long>(k)) *
                   binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(k)) *
                   binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k)));
        r += NormalForm::single(i - k, j - k, c);
    }
    return r;
}

inline NormalForm normal_product(const NormalForm& a, const NormalForm& b) {
    NormalForm r;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            // a†^{i1} (a^{j1} a†^{i2}) a^{j2}
            const NormalForm mid = reorder(ka.annihilation, kb.creation);
            const Rational c = ca * cb;
            for (const auto& [km, cm] : mid.terms())
                r.add_term({ka.creation + km.creation, kb.annihilation + km.annihilation}, c * cm);
        }
    }
    return r;
}

inline NormalForm operator*(const NormalForm& a, const NormalForm& b) { return normal_product(a, b); }

inline NormalForm power(const NormalForm& x, int n) {
    if (n < 0) throw std::invalid_argument("power: negative exponent");
    NormalForm r = NormalForm::identity();
    for (int k = 0; k < n; ++k) r = normal_product(r, x);
    return r;
}

// lambda-coefficients of e^{lambda X}: the list [X^n / n!] for n = 0..order.
// This is the brute-force oracle the flow solver is validated against.
inline std::vector<NormalForm> exp_series(const NormalForm& x, int order) {
    if (order < 0) throw std::invalid_argument("exp_series: negative order");
    std::vector<NormalForm> out;
    out.reserve(static_cast<size_t>(order) + 1);
    out.push_back(NormalForm::identity());
    for (int n = 1; n <= order; ++n)
        out.push_back(normal_product(out.back(), x) * Rational(1, n));
    return out;
}

enum class Side { creation_linear, annihilation_linear };

inline const char* to_string(Side s) {
    return s == Side::creation_linear ? "creation-linear" : "annihilation-linear";
}

// The four recognized writings of an operator linear in one letter. q and v
// are functions of the *other* letter (of a† for the first two, of a for the
// rest).
enum class LinearShape {
    q_before_a,    // q(a†) a  + v(a†)
    q_after_a,     // a q(a†)  + v(a†)
    q_after_adag,  // a† q(a)  + v(a)
    q_before_adag, // q(a) a†  + v(a)
};

struct LinearOperator {
    Series q;
    Series v;
    Side side;
};

// Rewrites any of the four linear shapes into the two canonical ones, using
//   a q(a†) = q(a†) a + q'(a†)   and   q(a) a† = a† q(a) + q'(a).
inline LinearOperator canonicalize_linear(LinearShape shape, const Series& q, const Series& v) {
    switch (shape) {
        case LinearShape::q_before_a:
            return {q, v, Side::creation_linear};
        case LinearShape::q_after_a:
            return {q, v + deriv(q), Side::creation_linear};
        case LinearShape::q_after_adag:
            return {q, v, Side::annihilation_linear};
        case LinearShape::q_before_adag:
            return {q, v + deriv(q), Side::annihilation_linear};
    }
    throw std::logic_error("canonicalize_linear: bad shape");
}

struct LinearPolyOperator {
    Poly q;
    Poly v;
    Side side;
};

// Reads (q, v) off a NormalForm that is linear in one letter; prefers the
// creation-linear reading when both apply.
inline LinearPolyOperator extract_linear(const NormalForm& x) {
    if (x.max_annihilation() <= 1) {
        std::vector<Rational> qc(static_cast<size_t>(x.max_creation()) + 1);
        std::vector<Rational> vc(static_cast<size_t>(x.max_creation()) + 1);
        for (const auto& [k, c] : x.terms())
            (k.annihilation == 1 ? qc : vc)[static_cast<size_t>(k.creation)] = c;
        return {Poly(std::move(qc)), Poly(std::move(vc)), Side::creation_linear};
    }
    if (x.max_creation() <= 1) {
        std::vector<Rational> qc(static_cast<size_t>(x.max_annihilation()) + 1);
        std::vector<Rational> vc(static_cast<size_t>(x.max_annihilation()) + 1);
        for (const auto& [k, c] : x.terms())
            (k.creation == 1 ? qc : vc)[static_cast<size_t>(k.annihilation)] = c;
        return {Poly(std::move(qc)), Poly(std::move(vc)), Side::annihilation_linear};
    }
    throw NotLinear("extract_linear: degree >= 2 in both letters");
}

// q(a†) a + v(a†)  or  a† q(a) + v(a), already normally ordered by shape.
inline NormalForm linear_normal_form(const Poly& q, const Poly& v, Side side) {
    NormalForm r;
    for (int k = 0; k <= q.degree(); ++k) {
        if (q.coeff(k).is_zero()) continue;
        r += side == Side::creation_linear ? NormalForm::single(k, 1, q.coeff(k))
                                           : NormalForm::single(1, k, q.coeff(k));
    }
    for (int k = 0; k <= v.degree(); ++k) {
        if (v.coeff(k).is_zero()) continue;
        r += side == Side::creation_linear ? NormalForm::single(k, 0, v.coeff(k))
                                           : NormalForm::single(0, k, v.coeff(k));
    }
    return r;
}

} // namespace ordo
