#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "heckeq/errors.hpp"
#include "heckeq/qpoly.hpp"

namespace heckeq {

/// Element of the field Q(q), kept in canonical form:
///   - num and den share no q-power: both are ordinary polynomials and at
///     most one of them is divisible by q,
///   - gcd(num, den) = 1 over the rationals,
///   - den has coprime integer coefficients and positive leading coefficient.
/// A Laurent polynomial therefore has den = q^k for some k >= 0.
class QRat {
  public:
    QRat() : num_(), den_(1) {}
    QRat(int c) : num_(c), den_(1) {}
    QRat(const BigRational& c) : num_(c), den_(1) {}
    QRat(const QPoly& p) : num_(p), den_(1) { canonicalize(); }
    QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    static QRat q_power(int e) { return QRat(QPoly::q_power(e)); }

    /// q - q^{-1}
    static QRat t() {
        QPoly p;
        p.set(1, BigRational(1));
        p.set(-1, BigRational(-1));
        return QRat(p);
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    /// True when the value lies in Q (denominator 1 and constant numerator).
    bool is_rational_constant() const {
        return den_.is_one() && (num_.is_zero() || num_.max_exp() == 0);
    }

    BigRational to_rational() const {
        if (!is_rational_constant()) throw std::logic_error("QRat: not a rational constant");
        return num_.coeff(0);
    }

    /// True when the value is a Laurent polynomial in q.
    bool is_laurent() const { return den_.is_monomial(); }

    QRat operator-() const { return QRat(-num_, den_, NoCanon{}); }

    friend QRat operator+(const QRat& a, const QRat& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_monomial() && b.den_.is_monomial())
            return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        const QPoly g = qpoly_gcd(a.den_, b.den_);
        if (qpoly_degree(g) < 1)
            return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        const QPoly bg = qpoly_divexact(b.den_, g);
        return QRat(a.num_ * bg + b.num_ * qpoly_divexact(a.den_, g), a.den_ * bg);
    }
    friend QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

    /// Multiplication with cross-reduction: both inputs are canonical, so
    /// after dividing out gcd(num_a, den_b) and gcd(num_b, den_a) the result
    /// is coprime and only the denominator rescaling remains.
    friend QRat operator*(const QRat& a, const QRat& b) {
        if (a.is_zero() || b.is_zero()) return QRat();
        if (a.den_.is_monomial() && b.den_.is_monomial())
            return QRat(a.num_ * b.num_, a.den_ * b.den_);
        QPoly na = a.num_, nb = b.num_, da = a.den_, db = b.den_;
        if (!na.is_monomial() && !db.is_monomial()) {
            const QPoly g = qpoly_gcd(na, db);
            if (qpoly_degree(g) > 0) {
                na = qpoly_divexact(na, g);
                db = qpoly_divexact(db, g);
            }
        }
        if (!nb.is_monomial() && !da.is_monomial()) {
            const QPoly g = qpoly_gcd(nb, da);
            if (qpoly_degree(g) > 0) {
                nb = qpoly_divexact(nb, g);
                da = qpoly_divexact(da, g);
            }
        }
        QRat r(na * nb, da * db, NoCanon{});
        r.normalize_shift_and_scale();
        return r;
    }
    friend QRat operator/(const QRat& a, const QRat& b) {
        if (b.is_zero()) throw std::domain_error("QRat: division by zero");
        QRat binv(b.den_, b.num_, NoCanon{});
        binv.normalize_shift_and_scale();
        return a * binv;
    }

    QRat& operator+=(const QRat& b) { return *this = *this + b; }
    QRat& operator-=(const QRat& b) { return *this = *this - b; }
    QRat& operator*=(const QRat& b) { return *this = *this * b; }
    QRat& operator/=(const QRat& b) { return *this = *this / b; }

    QRat inverse() const { return QRat(1) / *this; }

    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

  private:
    struct NoCanon {};
    QRat(QPoly num, QPoly den, NoCanon) : num_(std::move(num)), den_(std::move(den)) {}

    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly(1);
            return;
        }
        normalize_shift();
        // Monomials share no nontrivial factor with the other side after the
        // shift, so the gcd step is only needed when both sides have >= 2
        // terms.
        if (!num_.is_monomial() && !den_.is_monomial()) {
            const QPoly g = qpoly_gcd(num_, den_);
            if (qpoly_degree(g) > 0) {
                num_ = qpoly_divexact(num_, g);
                den_ = qpoly_divexact(den_, g);
            }
        }
        normalize_scale();
    }

    /// Shift by a common q-power so both parts become ordinary polynomials
    /// with at most one divisible by q.
    void normalize_shift() {
        const int s = std::min(num_.min_exp(), den_.min_exp());
        if (s != 0) {
            num_ = num_.shifted(-s);
            den_ = den_.shifted(-s);
        }
    }

    /// Make the denominator a primitive integer polynomial with positive
    /// leading coefficient.
    void normalize_scale() {
        BigRational c = den_.content();
        if (den_.leading_coeff() < 0) c = -c;
        if (c != 1) {
            num_ = num_.scaled(1 / c);
            den_ = den_.scaled(1 / c);
        }
    }

    /// Canonicalization for inputs already known to be gcd-free.
    void normalize_shift_and_scale() {
        if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly(1);
            return;
        }
        normalize_shift();
        normalize_scale();
    }

    QPoly num_;
    QPoly den_;
};

/// Quantum integer [n]_q = (q^n - q^{-n})/(q - q^{-1}) = q^{n-1} + q^{n-3} + ... + q^{1-n}.
inline QRat qint(int n) {
    if (n < 1) throw std::invalid_argument("qint: n must be >= 1");
    QPoly p;
    for (int i = 0; i < n; ++i) p.set(n - 1 - 2 * i, BigRational(1));
    return QRat(p);
}

/// Value at q = 1. Common (q-1)-powers are already cancelled by the canonical
/// form, so a vanishing denominator is a genuine pole.
inline BigRational eval_q_one(const QRat& f) {
    const BigRational d = f.den().eval_one();
    if (d.is_zero()) throw PoleError("QRat: pole at q = 1");
    return f.num().eval_one() / d;
}

} // namespace heckeq
