#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "heckeq/bigrational.hpp"
#include "heckeq/errors.hpp"
#include "heckeq/permutation.hpp"
#include "heckeq/poly.hpp"
#include "heckeq/ratfunc.hpp"
#include "heckeq/tableaux.hpp"

namespace heckeq {

/// Element of the rational group algebra of S_n. Serves as the q -> 1 oracle
/// and therefore depends on no Hecke-algebra code; products are plain
/// permutation compositions.
template <class S>
class GroupAlgebraElement {
  public:
    using TermMap = std::map<Permutation, S>;

    explicit GroupAlgebraElement(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("GroupAlgebraElement: n must be >= 1");
    }

    static GroupAlgebraElement one(int n) { return basis(n, Permutation(n)); }

    static GroupAlgebraElement basis(int n, const Permutation& w) {
        GroupAlgebraElement e(n);
        if (w.size() != n)
            throw std::invalid_argument("GroupAlgebraElement: permutation size mismatch");
        e.coeffs_.emplace(w, S(1));
        return e;
    }

    int n() const { return n_; }
    std::size_t term_count() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    const TermMap& terms() const { return coeffs_; }

    S coeff(const Permutation& w) const {
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? S(0) : it->second;
    }

    void add_term(const Permutation& w, const S& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    GroupAlgebraElement operator-() const {
        GroupAlgebraElement r(n_);
        for (const auto& [w, c] : coeffs_) r.coeffs_.emplace(w, -c);
        return r;
    }

    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b) {
        a.check_same(b);
        GroupAlgebraElement r = a;
        for (const auto& [w, c] : b.coeffs_) r.add_term(w, c);
        return r;
    }

    friend GroupAlgebraElement operator-(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b) {
        a.check_same(b);
        GroupAlgebraElement r = a;
        for (const auto& [w, c] : b.coeffs_) r.add_term(w, -c);
        return r;
    }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b) {
        a.check_same(b);
        GroupAlgebraElement r(a.n_);
        for (const auto& [w, c] : a.coeffs_)
            for (const auto& [v, d] : b.coeffs_) r.add_term(w * v, c * d);
        return r;
    }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const S& s) {
        GroupAlgebraElement r(a.n_);
        if (s.is_zero()) return r;
        for (const auto& [w, c] : a.coeffs_) r.add_term(w, c * s);
        return r;
    }
    friend GroupAlgebraElement operator*(const S& s, const GroupAlgebraElement& a) {
        return a * s;
    }
    friend GroupAlgebraElement operator/(const GroupAlgebraElement& a, const S& s) {
        if (s.is_zero()) throw std::domain_error("GroupAlgebraElement: division by zero scalar");
        GroupAlgebraElement r(a.n_);
        for (const auto& [w, c] : a.coeffs_) r.add_term(w, c / s);
        return r;
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& b) { return *this = *this + b; }
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& b) { return *this = *this - b; }
    GroupAlgebraElement& operator*=(const GroupAlgebraElement& b) { return *this = *this * b; }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return !(a == b);
    }

  private:
    void check_same(const GroupAlgebraElement& b) const {
        if (n_ != b.n_)
            throw std::invalid_argument("GroupAlgebraElement: mixing different group sizes");
    }

    int n_;
    TermMap coeffs_;
};

using SnElement = GroupAlgebraElement<BigRational>;
using SnRatFunc = RatFunc<BigRational>;
using SnElementU = GroupAlgebraElement<SnRatFunc>;

/// Jucys-Murphy element of the group algebra: (1 k) + (2 k) + ... + (k-1 k).
inline SnElement sn_jucys_murphy(int k, int n) {
    if (k < 1 || k > n) throw std::out_of_range("sn_jucys_murphy: k out of range");
    SnElement y(n);
    for (int i = 1; i < k; ++i) y.add_term(Permutation::transposition(n, i, k), BigRational(1));
    return y;
}

/// 1 - (i j)/(x - y) with values given as rational functions.
inline SnElementU sn_phi(int n, int i, int j, const SnRatFunc& x, const SnRatFunc& y) {
    const SnRatFunc diff = x - y;
    if (diff.is_zero()) throw PoleError("sn_phi: coinciding contents");
    SnElementU r = SnElementU::one(n);
    r.add_term(Permutation::transposition(n, i, j), -(SnRatFunc(1) / diff));
    return r;
}

inline SnElementU sn_promote(const SnElement& a) {
    SnElementU r(a.n());
    for (const auto& [w, c] : a.terms()) r.add_term(w, SnRatFunc(c));
    return r;
}

/// Primitive idempotent of Q[S_n] from the evaluated product of the factors
/// 1 - (i j)/(u_i - u_j) over pairs i < j, divided by the hook product.
/// The variables are substituted by the contents one at a time; grouping the
/// factors by their second index keeps a single variable live because factors
/// with the live variable in first position stay regular while their second
/// variable is still symbolic.
inline SnElement symmetric_group_fusion(const StandardTableau& t) {
    const int n = t.size();
    const std::vector<int> contents = t.content_sequence();
    SnElement acc = SnElement::one(n);
    for (int k = 1; k < n; ++k) {
        SnElementU p = sn_promote(acc);
        const SnRatFunc live = SnRatFunc::variable(Var::u);
        for (int i = 1; i <= k; ++i)
            p *= sn_phi(n, i, k + 1, SnRatFunc(BigRational(contents[i - 1])), live);
        SnElement value(n);
        const BigRational point(contents[k]);
        for (const auto& [w, c] : p.terms()) value.add_term(w, c.eval(point));
        acc = value;
    }
    return acc / BigRational(hook_product(t.shape()));
}

} // namespace heckeq
