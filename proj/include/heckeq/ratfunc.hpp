#pragma once

#include <string>
#include <utility>

#include "heckeq/errors.hpp"
#include "heckeq/poly.hpp"
#include "heckeq/qrat.hpp"

namespace heckeq {

/// Tag of the single live auxiliary variable a RatFunc may carry. Constants
/// carry Var::none and combine with anything; distinct live tags never mix.
enum class Var : unsigned char { none, u, Q };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::u: return "u";
        case Var::Q: return "Q";
        default: return "?";
    }
}

inline Var unify(Var a, Var b) {
    if (a == b || b == Var::none) return a;
    if (a == Var::none) return b;
    throw VariableMismatch(std::string("cannot mix live variables ") + var_name(a) + " and " +
                           var_name(b));
}

/// Scalar content of a Q(q)-coefficient polynomial: dividing by it leaves
/// Laurent coefficients whose ordinary parts are jointly coprime.
inline QRat poly_content(const Poly<QRat>& p) {
    if (p.is_zero()) return QRat(1);
    QPoly den_lcm(1);
    for (const QRat& c : p.coeffs()) {
        if (c.is_zero() || c.is_laurent()) continue;
        den_lcm = qpoly_lcm(den_lcm, c.den().shifted(-c.den().min_exp()));
    }
    const QRat scale(den_lcm);
    QPoly num_gcd;
    for (const QRat& c : p.coeffs()) {
        if (c.is_zero()) continue;
        const QRat lc = c * scale;
        num_gcd = num_gcd.is_zero()
                      ? qpoly_primitive(lc.num().shifted(-lc.num().min_exp()))
                      : qpoly_gcd(num_gcd, lc.num().shifted(-lc.num().min_exp()));
        if (num_gcd.is_one()) break;
    }
    return QRat(num_gcd) / scale;
}

/// Gcd with content stripping at every remainder step; the naive monic
/// Euclidean algorithm swells the q-coefficients exponentially on inputs of
/// this shape.
inline Poly<QRat> poly_gcd(Poly<QRat> a, Poly<QRat> b) {
    auto strip = [](Poly<QRat>& p) {
        const QRat c = poly_content(p);
        if (!c.is_one()) p = p.scaled(QRat(1) / c);
    };
    strip(a);
    strip(b);
    while (!b.is_zero()) {
        Poly<QRat> r = divmod(a, b).second;
        strip(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && !(a.leading_coeff() == QRat(1)))
        a = a.scaled(QRat(1) / a.leading_coeff());
    return a;
}

/// Rational function in one auxiliary variable over the field F, in canonical
/// form: gcd(num, den) = 1 and den monic. Values constant in the variable
/// normalize their tag back to Var::none.
template <class F>
class RatFunc {
  public:
    RatFunc() : num_(), den_(1), var_(Var::none) {}
    RatFunc(int c) : num_(c), den_(1), var_(Var::none) {}
    explicit RatFunc(const F& c) : num_(c), den_(1), var_(Var::none) {}
    RatFunc(Poly<F> num, Poly<F> den, Var v)
        : num_(std::move(num)), den_(std::move(den)), var_(v) {
        canonicalize();
    }

    static RatFunc variable(Var v) {
        if (v == Var::none) throw std::invalid_argument("RatFunc: variable needs a live tag");
        return RatFunc(Poly<F>::variable(), Poly<F>(1), v);
    }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    Var var() const { return var_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return var_ == Var::none; }

    F to_field() const {
        if (!is_constant()) throw std::logic_error("RatFunc: not constant in the variable");
        return num_.coeff(0);
    }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        const Var v = unify(a.var_, b.var_);
        if (a.is_zero()) return with_var(b, v);
        if (b.is_zero()) return with_var(a, v);
        if (a.den_.degree() > 0 && b.den_.degree() > 0) {
            const Poly<F> g = poly_gcd(a.den_, b.den_);
            if (g.degree() > 0) {
                const Poly<F> bg = divmod(b.den_, g).first;
                return RatFunc(a.num_ * bg + b.num_ * divmod(a.den_, g).first, a.den_ * bg, v);
            }
        }
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, v);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    /// Multiplication with cross-reduction; canonical inputs leave the result
    /// coprime, so only the monic rescaling remains.
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        const Var v = unify(a.var_, b.var_);
        if (a.is_zero() || b.is_zero()) return RatFunc();
        Poly<F> na = a.num_, nb = b.num_, da = a.den_, db = b.den_;
        if (na.degree() > 0 && db.degree() > 0) {
            const Poly<F> g = poly_gcd(na, db);
            if (g.degree() > 0) {
                na = divmod(na, g).first;
                db = divmod(db, g).first;
            }
        }
        if (nb.degree() > 0 && da.degree() > 0) {
            const Poly<F> g = poly_gcd(nb, da);
            if (g.degree() > 0) {
                nb = divmod(nb, g).first;
                da = divmod(da, g).first;
            }
        }
        RatFunc r;
        r.num_ = na * nb;
        r.den_ = da * db;
        r.var_ = v;
        r.normalize_scale();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        RatFunc binv;
        binv.num_ = b.den_;
        binv.den_ = b.num_;
        binv.var_ = b.var_;
        binv.normalize_scale();
        return a * binv;
    }

    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    RatFunc inverse() const { return RatFunc(1) / *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.var_ == b.var_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Exact substitution of the variable. Coprimality of num and den makes a
    /// vanishing denominator a genuine pole.
    F eval(const F& point) const {
        const F d = den_.eval(point);
        if (d.is_zero())
            throw PoleError(std::string("RatFunc: pole when evaluating ") + var_name(var_));
        return num_.eval(point) / d;
    }

  private:
    static RatFunc with_var(const RatFunc& a, Var v) {
        RatFunc r = a;
        r.var_ = r.num_.degree() < 1 && r.den_.degree() < 1 ? Var::none : v;
        return r;
    }

    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>(1);
            var_ = Var::none;
            return;
        }
        if (num_.degree() > 0 && den_.degree() > 0) {
            const Poly<F> g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
        }
        normalize_scale();
    }

    /// Rescaling for inputs already known to be gcd-free.
    void normalize_scale() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>(1);
            var_ = Var::none;
            return;
        }
        if (!(den_.leading_coeff() == F(1))) {
            const F lc = den_.leading_coeff();
            num_ = num_.scaled(F(1) / lc);
            den_ = den_.scaled(F(1) / lc);
        }
        if (num_.degree() < 1 && den_.degree() < 1) var_ = Var::none;
    }

    Poly<F> num_;
    Poly<F> den_;
    Var var_;
};

/// Rational functions in one spectral variable (or in the trace parameter Q)
/// over Q(q).
using URat = RatFunc<QRat>;

inline URat urat_var(Var v) { return URat::variable(v); }
inline URat urat_const(const QRat& c) { return URat(c); }

/// Substitute the live variable by the Laurent monomial q^{2c}.
inline QRat eval_at_q_power(const URat& f, int c) { return f.eval(QRat::q_power(2 * c)); }

} // namespace heckeq
