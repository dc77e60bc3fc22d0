#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "heckeq/bigrational.hpp"

namespace heckeq {

/// Laurent polynomial in q with rational coefficients, stored as a sparse
/// exponent -> coefficient map. No zero coefficients are kept; the zero
/// polynomial has an empty map.
class QPoly {
  public:
    using TermMap = std::map<int, BigRational>;

    QPoly() = default;
    QPoly(int c) { set(0, BigRational(c)); }
    QPoly(const BigRational& c) { set(0, c); }

    static QPoly q_power(int e) { return monomial(BigRational(1), e); }

    static QPoly monomial(const BigRational& c, int e) {
        QPoly p;
        p.set(e, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }
    bool is_monomial() const { return terms_.size() <= 1; }
    std::size_t term_count() const { return terms_.size(); }

    const TermMap& terms() const { return terms_; }

    int min_exp() const {
        if (is_zero()) throw std::logic_error("QPoly: min_exp of zero");
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw std::logic_error("QPoly: max_exp of zero");
        return terms_.rbegin()->first;
    }

    BigRational coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    BigRational leading_coeff() const {
        if (is_zero()) throw std::logic_error("QPoly: leading_coeff of zero");
        return terms_.rbegin()->second;
    }

    void set(int e, const BigRational& c) {
        if (c.is_zero())
            terms_.erase(e);
        else
            terms_[e] = c;
    }

    void add_term(int e, const BigRational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Multiply by q^k.
    QPoly shifted(int k) const {
        QPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    QPoly operator-() const {
        QPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        QPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        QPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    QPoly& operator+=(const QPoly& b) { return *this = *this + b; }
    QPoly& operator-=(const QPoly& b) { return *this = *this - b; }
    QPoly& operator*=(const QPoly& b) { return *this = *this * b; }

    QPoly scaled(const BigRational& c) const {
        QPoly r;
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
        return r;
    }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    /// Value at q = 1.
    BigRational eval_one() const {
        BigRational s(0);
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients. Undefined for zero.
    BigRational content() const {
        if (is_zero()) throw std::logic_error("QPoly: content of zero");
        BigInt g(0), l(1);
        for (const auto& [e, c] : terms_) {
            g = big_gcd(g, numerator(c));
            l = big_lcm(l, denominator(c));
        }
        return BigRational(g, l);
    }

  private:
    TermMap terms_;
};

/// Degree of an ordinary (min_exp >= 0) polynomial; -1 for zero.
inline int qpoly_degree(const QPoly& p) { return p.is_zero() ? -1 : p.max_exp(); }

/// Long division over the rationals. Both arguments must be ordinary
/// polynomials (no negative exponents).
inline std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("QPoly: division by zero");
    QPoly quot, rem = a;
    const int db = b.max_exp();
    const BigRational lb = b.leading_coeff();
    while (!rem.is_zero() && rem.max_exp() >= db) {
        const int e = rem.max_exp() - db;
        const BigRational c = rem.leading_coeff() / lb;
        quot.add_term(e, c);
        rem -= b.shifted(e).scaled(c);
    }
    return {quot, rem};
}

inline QPoly qpoly_divexact(const QPoly& a, const QPoly& b) {
    auto [q, r] = qpoly_divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("QPoly: inexact division");
    return q;
}

/// Primitive integer part: positive leading coefficient, coprime integer
/// coefficients. Zero maps to zero.
inline QPoly qpoly_primitive(const QPoly& p) {
    if (p.is_zero()) return p;
    BigRational c = p.content();
    if (p.leading_coeff() < 0) c = -c;
    return p.scaled(1 / c);
}

/// Gcd of two ordinary polynomials, returned primitive with positive leading
/// coefficient (primitive remainder sequence).
inline QPoly qpoly_gcd(QPoly a, QPoly b) {
    a = qpoly_primitive(a);
    b = qpoly_primitive(b);
    while (!b.is_zero()) {
        QPoly r = qpoly_divmod(a, b).second;
        a = std::move(b);
        b = qpoly_primitive(r);
    }
    return a;
}

inline QPoly qpoly_lcm(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    return qpoly_primitive(qpoly_divexact(a * b, qpoly_gcd(a, b)));
}

/// Exact division of Laurent polynomials.
inline QPoly laurent_divexact(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return a;
    const int sa = a.min_exp();
    const int sb = b.min_exp();
    return qpoly_divexact(a.shifted(-sa), b.shifted(-sb)).shifted(sa - sb);
}

} // namespace heckeq
