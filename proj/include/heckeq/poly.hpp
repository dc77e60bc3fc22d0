#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace heckeq {

/// Dense univariate polynomial over a field F. F must provide field
/// arithmetic, equality, is_zero() and construction from int.
template <class F>
class Poly {
  public:
    Poly() = default;
    Poly(int c) : c_{F(c)} { normalize(); }
    Poly(const F& c) : c_{c} { normalize(); }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly variable() {
        Poly p;
        p.c_ = {F(0), F(1)};
        return p;
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }

    const F& leading_coeff() const {
        if (is_zero()) throw std::logic_error("Poly: leading coefficient of zero");
        return c_.back();
    }

    F coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
        return c_[i];
    }

    const std::vector<F>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (F& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.normalize();
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.resize(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly scaled(const F& c) const {
        if (c.is_zero()) return Poly();
        Poly r = *this;
        for (F& x : r.c_) x *= c;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    F eval(const F& x) const {
        F r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly rem = a;
        Poly quot;
        quot.c_.assign(a.c_.size(), F(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const int e = rem.degree() - b.degree();
            const F c = rem.leading_coeff() / b.leading_coeff();
            quot.c_[e] = c;
            Poly sub;
            sub.c_.assign(e + b.c_.size(), F(0));
            for (std::size_t i = 0; i < b.c_.size(); ++i) sub.c_[e + i] = b.c_[i] * c;
            sub.normalize();
            rem = rem - sub;
        }
        quot.normalize();
        return {quot, rem};
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_; // c_[i] is the coefficient of x^i
};

/// Monic gcd by the Euclidean algorithm. Fields whose values can swell under
/// repeated division (rational functions) get their own overload.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && !(a.leading_coeff() == F(1))) a = a.scaled(F(1) / a.leading_coeff());
    return a;
}

template <class F>
Poly<F> poly_lcm(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<F>();
    const Poly<F> g = poly_gcd(a, b);
    Poly<F> l = divmod(a * b, g).first;
    if (!(l.leading_coeff() == F(1))) l = l.scaled(F(1) / l.leading_coeff());
    return l;
}

} // namespace heckeq
