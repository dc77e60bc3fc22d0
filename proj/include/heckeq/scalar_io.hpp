#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>

#include "heckeq/errors.hpp"
#include "heckeq/qrat.hpp"
#include "heckeq/ratfunc.hpp"

namespace heckeq {

namespace detail {

/// Integer-coefficient Laurent polynomial in descending powers of q,
/// e.g. "q^2+1+q^-2" or "2*q^3-q".
inline std::string render_int_laurent(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const int e = it->first;
        const BigRational& c = it->second;
        const bool neg = c < 0;
        BigInt mag = numerator(neg ? BigRational(-c) : c);
        if (!s.empty())
            s += neg ? "-" : "+";
        else if (neg)
            s += "-";
        if (e == 0) {
            s += mag.str();
        } else {
            if (mag != 1) s += mag.str() + "*";
            s += "q";
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

/// Splits x into (a/b) * prim / d0 with prim, d0 primitive integer
/// polynomials and returns the display pieces.
struct QRatParts {
    QPoly scaled_num; // a * prim, integer Laurent
    BigInt extra_den; // b
    QPoly den0;       // non-monomial denominator part (1 when Laurent)
};

inline QRatParts qrat_parts(const QRat& x) {
    QRatParts parts;
    parts.extra_den = 1;
    parts.den0 = QPoly(1);
    if (x.is_zero()) {
        parts.scaled_num = QPoly();
        return parts;
    }
    const int shift = x.den().min_exp();
    QPoly laurent_num = x.num().shifted(-shift);
    if (!x.is_laurent()) parts.den0 = x.den().shifted(-shift);
    BigRational content = laurent_num.content();
    if (laurent_num.leading_coeff() < 0) content = -content;
    parts.scaled_num = laurent_num.scaled(1 / content).scaled(BigRational(numerator(content)));
    parts.extra_den = denominator(content);
    return parts;
}

} // namespace detail

/// Canonical ASCII form of a Q(q) scalar. Laurent polynomials print bare
/// ("q^2+1+q^-2"), other values as num/den with integer-coefficient parts,
/// the denominator omitted when 1.
inline std::string render_qrat(const QRat& x) {
    const auto parts = detail::qrat_parts(x);
    std::string num = detail::render_int_laurent(parts.scaled_num);
    const bool den_trivial = parts.den0.is_one() && parts.extra_den == 1;
    if (den_trivial) return num;
    if (parts.scaled_num.term_count() > 1) num = "(" + num + ")";
    std::string den;
    if (parts.den0.is_one()) {
        den = parts.extra_den.str();
    } else {
        den = detail::render_int_laurent(parts.den0.scaled(BigRational(parts.extra_den)));
        if (parts.den0.term_count() > 1) den = "(" + den + ")";
    }
    return num + "/" + den;
}

namespace detail {

inline bool coeff_needs_parens(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '+') return true;
        if (s[i] == '-' && i > 0 && s[i - 1] != '^') return true;
    }
    return false;
}

inline std::string render_upoly(const Poly<QRat>& p, const char* var) {
    if (p.is_zero()) return "0";
    // Clear any non-monomial coefficient denominators into one display
    // denominator.
    QPoly g(1);
    for (const QRat& c : p.coeffs()) {
        if (c.is_zero() || c.is_laurent()) continue;
        g = qpoly_lcm(g, c.den().shifted(-c.den().min_exp()));
    }
    std::string out;
    for (int e = p.degree(); e >= 0; --e) {
        const QRat c = p.coeff(e) * QRat(g);
        if (c.is_zero()) continue;
        std::string cs = render_qrat(c);
        std::string body;
        if (e > 0) {
            body = var;
            if (e != 1) body += "^" + std::to_string(e);
        }
        std::string term;
        if (body.empty()) {
            term = coeff_needs_parens(cs) ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            term = body;
        } else if (cs == "-1") {
            term = "-" + body;
        } else {
            if (coeff_needs_parens(cs)) cs = "(" + cs + ")";
            term = cs + "*" + body;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    if (!g.is_one()) out = "(" + out + ")/(" + render_int_laurent(g) + ")";
    return out;
}

} // namespace detail

/// Canonical ASCII form of a rational function in u or Q over Q(q).
inline std::string render_urat(const URat& f) {
    if (f.is_constant()) return render_qrat(f.to_field());
    const char* v = var_name(f.var());
    std::string num = detail::render_upoly(f.num(), v);
    if (f.den().is_one()) return num;
    return "(" + num + ")/(" + detail::render_upoly(f.den(), v) + ")";
}

// ---------------------------------------------------------------------------
// Parsing. One grammar covers QRat and URat strings:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-'* atom ('^' ('-')? INT)?
//   atom   := INT | 'q' | 'u' | 'Q' | '(' expr ')'
// ---------------------------------------------------------------------------

namespace detail {

class ScalarParser {
  public:
    explicit ScalarParser(const std::string& text) : s_(text) {}

    URat parse() {
        URat v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

  private:
    URat expr() {
        URat v = term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    URat term() {
        URat v = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                const URat d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    URat factor() {
        skip_ws();
        bool neg = false;
        while (eat('-')) neg = !neg;
        URat v = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            bool eneg = eat('-');
            const long e = integer();
            v = power(v, eneg ? -e : e);
        }
        return neg ? -v : v;
    }

    URat atom() {
        skip_ws();
        if (eat('(')) {
            URat v = expr();
            skip_ws();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return URat(QRat(BigRational(BigInt(digits()))));
        if (eat('q')) return URat(QRat::q_power(1));
        if (eat('u')) return URat::variable(Var::u);
        if (eat('Q')) return URat::variable(Var::Q);
        fail("unexpected character");
        return URat();
    }

    static URat power(URat base, long e) {
        if (e < 0) {
            if (base.is_zero()) throw ParseError("scalar: zero to a negative power");
            base = base.inverse();
            e = -e;
        }
        URat r(1);
        for (; e > 0; --e) r *= base;
        return r;
    }

    long integer() {
        const std::string d = digits();
        try {
            return std::stol(d);
        } catch (const std::exception&) {
            fail("exponent out of range");
        }
        return 0;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("scalar: " + why + " at position " + std::to_string(pos_) + " in \"" +
                         s_ + "\"");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses a scalar that may involve q and at most one of u, Q.
inline URat parse_scalar(const std::string& text) {
    return detail::ScalarParser(text).parse();
}

/// Parses a scalar required to lie in Q(q).
inline QRat parse_qrat(const std::string& text) {
    const URat v = parse_scalar(text);
    if (!v.is_constant()) throw ParseError("scalar: expected a value without u or Q");
    return v.to_field();
}

inline std::ostream& operator<<(std::ostream& os, const QRat& x) { return os << render_qrat(x); }
inline std::ostream& operator<<(std::ostream& os, const URat& x) { return os << render_urat(x); }

} // namespace heckeq
