#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heckeq/errors.hpp"
#include "heckeq/permutation.hpp"
#include "heckeq/qrat.hpp"
#include "heckeq/ratfunc.hpp"

namespace heckeq {

/// Embedding of scalar constants into the coefficient field of an element.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<QRat> {
    static QRat from_qrat(const QRat& x) { return x; }

    /// Scalar clearing every non-monomial coefficient denominator of the
    /// element; multiplying by it leaves Laurent coefficients, whose
    /// arithmetic needs no polynomial gcd.
    template <class Element>
    static QRat common_denominator(const Element& a) {
        std::vector<QPoly> distinct;
        for (const auto& [w, c] : a.terms()) {
            if (c.is_laurent()) continue;
            QPoly core = c.den().shifted(-c.den().min_exp());
            bool fresh = true;
            for (const QPoly& d : distinct) fresh = fresh && !(d == core);
            if (fresh) distinct.push_back(std::move(core));
        }
        QPoly l(1);
        for (const QPoly& d : distinct) l = qpoly_lcm(l, d);
        return QRat(l);
    }
};

template <>
struct ScalarOps<URat> {
    static URat from_qrat(const QRat& x) { return URat(x); }

    /// Clears denominators on both levels: the monic lcm of the u-level
    /// denominators, scaled by the lcm of every q-level denominator in sight,
    /// so that multiplying through leaves polynomial coefficients whose
    /// q-coefficients are Laurent.
    template <class Element>
    static URat common_denominator(const Element& a) {
        std::vector<Poly<QRat>> distinct;
        std::vector<QPoly> qcores;
        Var var = Var::none;
        auto collect_qcore = [&qcores](const QRat& x) {
            if (x.is_zero() || x.is_laurent()) return;
            QPoly core = x.den().shifted(-x.den().min_exp());
            for (const QPoly& d : qcores)
                if (d == core) return;
            qcores.push_back(std::move(core));
        };
        for (const auto& [w, c] : a.terms()) {
            for (const QRat& x : c.num().coeffs()) collect_qcore(x);
            for (const QRat& x : c.den().coeffs()) collect_qcore(x);
            if (c.den().degree() < 1) continue;
            var = unify(var, c.var());
            bool fresh = true;
            for (const Poly<QRat>& d : distinct) fresh = fresh && !(d == c.den());
            if (fresh) distinct.push_back(c.den());
        }
        Poly<QRat> l(QRat(1));
        for (const Poly<QRat>& d : distinct) {
            const Poly<QRat> g = poly_gcd(l, d);
            l = divmod(l * d, g).first;
        }
        QPoly lq(1);
        for (const QPoly& d : qcores) lq = qpoly_lcm(lq, d);
        if (l.degree() < 1 && lq.is_one()) return URat(1);
        return URat(l.scaled(QRat(lq)), Poly<QRat>(QRat(1)), var);
    }
};

/// Element of the Hecke algebra H_n as a sparse combination of the basis
/// {T_w}, with scalars S = QRat or S = URat fixed at the type level.
template <class S>
class HeckeElement {
  public:
    using TermMap = std::map<Permutation, S>;

    explicit HeckeElement(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("HeckeElement: n must be >= 1");
    }

    static HeckeElement one(int n) { return basis(n, Permutation(n)); }

    static HeckeElement basis(int n, const Permutation& w) {
        HeckeElement e(n);
        if (w.size() != n) throw std::invalid_argument("HeckeElement: permutation size mismatch");
        e.coeffs_.emplace(w, S(1));
        return e;
    }

    /// T_i.
    static HeckeElement generator(int n, int i) {
        if (i < 1 || i >= n) throw std::out_of_range("HeckeElement: generator index");
        return basis(n, Permutation(n).right_mult_gen(i));
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

    HeckeElement operator-() const {
        HeckeElement r(n_);
        for (const auto& [w, c] : coeffs_) r.coeffs_.emplace(w, -c);
        return r;
    }

    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
        a.check_same(b);
        HeckeElement r = a;
        for (const auto& [w, c] : b.coeffs_) r.add_term(w, c);
        return r;
    }

    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
        a.check_same(b);
        HeckeElement r = a;
        for (const auto& [w, c] : b.coeffs_) r.add_term(w, -c);
        return r;
    }

    friend HeckeElement operator*(const HeckeElement& a, const S& s) {
        HeckeElement r(a.n_);
        if (s.is_zero()) return r;
        for (const auto& [w, c] : a.coeffs_) r.add_term(w, c * s);
        return r;
    }
    friend HeckeElement operator*(const S& s, const HeckeElement& a) { return a * s; }

    friend HeckeElement operator/(const HeckeElement& a, const S& s) {
        if (s.is_zero()) throw std::domain_error("HeckeElement: division by zero scalar");
        HeckeElement r(a.n_);
        for (const auto& [w, c] : a.coeffs_) r.add_term(w, c / s);
        return r;
    }

    /// Right multiplication by T_i:
    ///   T_w T_i = T_{w s_i}                      if the length goes up,
    ///   T_w T_i = T_{w s_i} + (q - q^{-1}) T_w   otherwise.
    HeckeElement times_generator(int i) const {
        if (i < 1 || i >= n_) throw std::out_of_range("HeckeElement: generator index");
        const S t = ScalarOps<S>::from_qrat(QRat::t());
        HeckeElement r(n_);
        for (const auto& [w, c] : coeffs_) {
            r.add_term(w.right_mult_gen(i), c);
            if (!w.right_mult_increases(i)) r.add_term(w, c * t);
        }
        return r;
    }

    /// Right multiplication by T_w along a reduced word of w.
    HeckeElement times_basis(const Permutation& w) const {
        HeckeElement r = *this;
        for (int i : w.reduced_word()) r = r.times_generator(i);
        return r;
    }

    /// a * b. The products a T_w for w in the support of b are built
    /// incrementally (a T_w = (a T_{w s_i}) T_i at a right descent i), so
    /// shared word prefixes are computed once; coefficient denominators are
    /// factored out up front so the inner arithmetic stays gcd-free.
    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
        a.check_same(b);
        HeckeElement r(a.n_);
        if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
        const S da = ScalarOps<S>::common_denominator(a);
        const S db = ScalarOps<S>::common_denominator(b);
        const bool scaled = !da.is_one() || !db.is_one();

        std::map<Permutation, HeckeElement> cache;
        cache.emplace(Permutation(a.n_), scaled ? a * da : a);
        auto product_with = [&cache](auto&& self, const Permutation& w) -> const HeckeElement& {
            auto it = cache.find(w);
            if (it != cache.end()) return it->second;
            int i = 1;
            while (w.right_mult_increases(i)) ++i; // w != id, so a descent exists
            const HeckeElement part = self(self, w.right_mult_gen(i)).times_generator(i);
            return cache.emplace(w, std::move(part)).first->second;
        };

        for (const auto& [w, c] : b.coeffs_) {
            const S cb = scaled ? c * db : c;
            for (const auto& [v, d] : product_with(product_with, w).coeffs_)
                r.add_term(v, d * cb);
        }
        if (scaled) r = r / (da * db);
        return r;
    }

    HeckeElement& operator+=(const HeckeElement& b) { return *this = *this + b; }
    HeckeElement& operator-=(const HeckeElement& b) { return *this = *this - b; }
    HeckeElement& operator*=(const HeckeElement& b) { return *this = *this * b; }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

  private:
    void check_same(const HeckeElement& b) const {
        if (n_ != b.n_) throw std::invalid_argument("HeckeElement: mixing H_n of different n");
    }

    int n_;
    TermMap coeffs_;
};

using HeckeQ = HeckeElement<QRat>;
using HeckeU = HeckeElement<URat>;

/// Explicit promotion of coefficients from Q(q) into the rational-function
/// field over Q(q).
inline HeckeU promote(const HeckeQ& a) {
    HeckeU r(a.n());
    for (const auto& [w, c] : a.terms()) r.add_term(w, URat(c));
    return r;
}

template <class S>
HeckeElement<S> embed(const HeckeElement<S>& a, int n) {
    HeckeElement<S> r(n);
    for (const auto& [w, c] : a.terms()) r.add_term(w.extended(n), c);
    return r;
}

template <class S>
HeckeElement<S> restrict_to(const HeckeElement<S>& a, int n) {
    HeckeElement<S> r(n);
    for (const auto& [w, c] : a.terms()) r.add_term(w.restricted(n), c);
    return r;
}

/// T_{i_1} T_{i_2} ... T_{i_l}.
template <class S = QRat>
HeckeElement<S> t_of_word(int n, const std::vector<int>& word) {
    HeckeElement<S> r = HeckeElement<S>::one(n);
    for (int i : word) r = r.times_generator(i);
    return r;
}

/// T_i^{-1} = T_i - (q - q^{-1}).
template <class S = QRat>
HeckeElement<S> gen_inverse(int n, int i) {
    HeckeElement<S> r = HeckeElement<S>::generator(n, i);
    r.add_term(Permutation(n), -ScalarOps<S>::from_qrat(QRat::t()));
    return r;
}

namespace detail {

inline std::vector<int> longest_word_ascending_blocks(int k) {
    // (s_1)(s_2 s_1)(s_3 s_2 s_1)...(s_{k-1} ... s_1)
    std::vector<int> word;
    for (int j = 1; j < k; ++j)
        for (int i = j; i >= 1; --i) word.push_back(i);
    return word;
}

inline std::vector<int> longest_word_descending_blocks(int k) {
    // (s_1 ... s_{k-1})(s_1 ... s_{k-2})...(s_1 s_2)(s_1)
    std::vector<int> word;
    for (int j = k - 1; j >= 1; --j)
        for (int i = 1; i <= j; ++i) word.push_back(i);
    return word;
}

} // namespace detail

/// T_{w_k} for the longest element w_k of S_k inside H_n.
template <class S = QRat>
HeckeElement<S> t_longest(int k, int n) {
    if (k < 1 || k > n) throw std::out_of_range("t_longest: k out of range");
    return t_of_word<S>(n, detail::longest_word_ascending_blocks(k));
}

/// The same element built from the reversed block form; equal to t_longest.
template <class S = QRat>
HeckeElement<S> t_longest_alt(int k, int n) {
    if (k < 1 || k > n) throw std::out_of_range("t_longest_alt: k out of range");
    return t_of_word<S>(n, detail::longest_word_descending_blocks(k));
}

template <class S = QRat>
HeckeElement<S> t_longest_inverse(int k, int n) {
    if (k < 1 || k > n) throw std::out_of_range("t_longest_inverse: k out of range");
    std::vector<int> word = detail::longest_word_ascending_blocks(k);
    HeckeElement<S> r = HeckeElement<S>::one(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) r *= gen_inverse<S>(n, *it);
    return r;
}

/// Jucys-Murphy element y_k, built from y_1 = 1, y_{k+1} = T_k y_k T_k.
template <class S = QRat>
HeckeElement<S> jucys_murphy(int k, int n) {
    if (k < 1 || k > n) throw std::out_of_range("jucys_murphy: k out of range");
    HeckeElement<S> y = HeckeElement<S>::one(n);
    for (int i = 1; i < k; ++i) {
        const HeckeElement<S> t = HeckeElement<S>::generator(n, i);
        y = t * y * t;
    }
    return y;
}

/// Closed form y_k = 1 + (q - q^{-1}) (T_{(1 k)} + ... + T_{(k-1 k)}).
template <class S = QRat>
HeckeElement<S> jucys_murphy_closed(int k, int n) {
    if (k < 1 || k > n) throw std::out_of_range("jucys_murphy_closed: k out of range");
    const S t = ScalarOps<S>::from_qrat(QRat::t());
    HeckeElement<S> y = HeckeElement<S>::one(n);
    for (int i = 1; i < k; ++i) y.add_term(Permutation::transposition(n, i, k), t);
    return y;
}

/// Baxterized generator T_i(x, y) = T_i + (q - q^{-1}) x / (y - x).
inline HeckeU baxterized(int n, int i, const URat& x, const URat& y) {
    const URat diff = y - x;
    if (diff.is_zero()) throw PoleError("baxterized: coinciding spectral parameters");
    HeckeU r = HeckeU::generator(n, i);
    r.add_term(Permutation(n), URat(QRat::t()) * x / diff);
    return r;
}

inline HeckeQ baxterized(int n, int i, const QRat& x, const QRat& y) {
    const QRat diff = y - x;
    if (diff.is_zero()) throw PoleError("baxterized: coinciding spectral parameters");
    HeckeQ r = HeckeQ::generator(n, i);
    r.add_term(Permutation(n), QRat::t() * x / diff);
    return r;
}

/// Inverse over the scalar field via a dense exact linear solve of
/// a * X = 1 in the T_w basis (first-nonzero pivoting).
template <class S>
HeckeElement<S> invert(const HeckeElement<S>& a) {
    const int n = a.n();
    const std::vector<Permutation> basis = all_permutations(n);
    const std::size_t N = basis.size();
    std::map<Permutation, std::size_t> index;
    for (std::size_t j = 0; j < N; ++j) index.emplace(basis[j], j);

    // column j holds a * T_{basis[j]}; the last column is the identity target.
    // The products are built along shared descent chains, one generator step
    // per basis element.
    std::vector<std::vector<S>> m(N, std::vector<S>(N + 1, S(0)));
    {
        std::map<Permutation, HeckeElement<S>> cache;
        cache.emplace(Permutation(n), a);
        auto product_with = [&cache](auto&& self, const Permutation& w) -> const HeckeElement<S>& {
            auto it = cache.find(w);
            if (it != cache.end()) return it->second;
            int i = 1;
            while (w.right_mult_increases(i)) ++i;
            const HeckeElement<S> part = self(self, w.right_mult_gen(i)).times_generator(i);
            return cache.emplace(w, std::move(part)).first->second;
        };
        for (std::size_t j = 0; j < N; ++j)
            for (const auto& [w, c] : product_with(product_with, basis[j]).terms())
                m[index.at(w)][j] = c;
    }
    m[index.at(Permutation(n))][N] = S(1);

    std::vector<std::size_t> pivot_col(N);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < N && rank < N; ++col) {
        std::size_t piv = rank;
        while (piv < N && m[piv][col].is_zero()) ++piv;
        if (piv == N) continue;
        std::swap(m[piv], m[rank]);
        const S inv_p = S(1) / m[rank][col];
        for (std::size_t j = col; j <= N; ++j)
            if (!m[rank][j].is_zero()) m[rank][j] *= inv_p;
        for (std::size_t r = 0; r < N; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const S f = m[r][col];
            for (std::size_t j = col; j <= N; ++j)
                if (!m[rank][j].is_zero()) m[r][j] -= f * m[rank][j];
        }
        pivot_col[rank++] = col;
    }
    if (rank < N) throw SingularError("invert: element is not invertible");

    HeckeElement<S> x(n);
    for (std::size_t r = 0; r < N; ++r) x.add_term(basis[pivot_col[r]], m[r][N]);
    return x;
}

/// (u - a)^{-1} for an element with Q(q) coefficients. The powers 1, a, a^2,
/// ... are reduced by exact Gaussian elimination (first-nonzero pivot) until
/// the monic dependency m(a) = 0 appears; then
///   (u - a)^{-1} = sum_{j<d} u^j (sum_{i>j} m_i a^{i-1-j}) / m(u),
/// since the product against (u - a) telescopes to m(u). Only powers of a and
/// linear algebra over Q(q) enter, so the result is as independent of any
/// spectral data as the dense solve, at a fraction of the cost.
inline HeckeU resolvent(const HeckeQ& a) {
    const int n = a.n();
    const std::vector<Permutation> basis = all_permutations(n);
    const std::size_t N = basis.size();
    std::map<Permutation, std::size_t> index;
    for (std::size_t j = 0; j < N; ++j) index.emplace(basis[j], j);

    struct Row {
        std::vector<QPoly> v;
        std::vector<QPoly> comb; // v = sum_j comb[j] a^j, up to an overall scalar
        std::size_t pivot;
    };
    std::vector<HeckeQ> powers{HeckeQ::one(n)};
    std::vector<Row> rows;
    std::vector<QPoly> dependency;

    // Fraction-free (Bareiss) elimination over the Laurent polynomial ring:
    // cross-multiplied updates divided exactly by the previous pivot, so
    // entries stay polynomial with controlled growth and the reduction needs
    // no gcd. The dependency is a scalar multiple of the minimal polynomial,
    // which cancels in the quotient.
    auto laurent_coeff = [](const QRat& c) {
        // coefficients of the powers are Laurent: den = q^k
        return c.num().shifted(-c.den().min_exp());
    };
    for (std::size_t step = 0; step <= N; ++step) {
        std::vector<QPoly> v(N);
        for (const auto& [w, c] : powers[step].terms()) v[index.at(w)] = laurent_coeff(c);
        std::vector<QPoly> comb(step + 1);
        comb[step] = QPoly(1);
        QPoly prev(1);
        for (const Row& row : rows) {
            const QPoly f = v[row.pivot];
            const QPoly& p = row.v[row.pivot];
            for (std::size_t j = 0; j < N; ++j) {
                QPoly t = p * v[j];
                if (!f.is_zero() && !row.v[j].is_zero()) t -= f * row.v[j];
                v[j] = t.is_zero() ? t : laurent_divexact(t, prev);
            }
            for (std::size_t j = 0; j < comb.size(); ++j) {
                QPoly t = p * comb[j];
                if (!f.is_zero() && j < row.comb.size() && !row.comb[j].is_zero())
                    t -= f * row.comb[j];
                comb[j] = t.is_zero() ? t : laurent_divexact(t, prev);
            }
            prev = p;
        }
        std::size_t p = 0;
        while (p < N && v[p].is_zero()) ++p;
        if (p == N) {
            dependency = std::move(comb); // the a^step entry is a pivot product, nonzero
            break;
        }
        rows.push_back(Row{std::move(v), std::move(comb), p});
        powers.push_back(powers.back() * a);
    }

    // Strip the accumulated pivot factor: the minimal polynomial itself has
    // small coefficients, the elimination returns a scalar multiple.
    QPoly common;
    for (const QPoly& c : dependency) {
        if (c.is_zero()) continue;
        const QPoly core = c.shifted(-c.min_exp());
        common = common.is_zero() ? qpoly_primitive(core) : qpoly_gcd(common, core);
        if (common.is_one()) break;
    }
    if (!common.is_one())
        for (QPoly& c : dependency)
            if (!c.is_zero()) c = laurent_divexact(c, common);

    const std::size_t d = dependency.size() - 1;
    std::vector<QRat> mcoeffs;
    mcoeffs.reserve(d + 1);
    for (const QPoly& c : dependency) mcoeffs.push_back(QRat(c));
    const Poly<QRat> minpoly{std::move(mcoeffs)};
    std::vector<HeckeQ> numer(d, HeckeQ(n));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = j + 1; i <= d; ++i)
            numer[j] += QRat(dependency[i]) * powers[i - 1 - j];

    HeckeU r(n);
    for (std::size_t b = 0; b < N; ++b) {
        std::vector<QRat> pc(d, QRat(0));
        bool nonzero = false;
        for (std::size_t j = 0; j < d; ++j) {
            pc[j] = numer[j].coeff(basis[b]);
            nonzero = nonzero || !pc[j].is_zero();
        }
        if (nonzero) r.add_term(basis[b], URat(Poly<QRat>(std::move(pc)), minpoly, Var::u));
    }
    return r;
}

/// T_{w_k} T_j(x, y) == T_{k-j}(x, y) T_{w_k}, checked exactly.
inline bool longest_conjugation_check(int n, int k, int j, const QRat& x, const QRat& y) {
    if (!(1 <= j && j < k && k <= n)) throw std::invalid_argument("longest_conjugation_check");
    const HeckeQ tw = t_longest(k, n);
    return tw * baxterized(n, j, x, y) == baxterized(n, k - j, x, y) * tw;
}

/// Staircase shift identity for products of baxterized generators:
///   T_{w_{k+1}} T_2(u,s_{k-1}) ... T_k(u,s_1) T_{w_k}^{-1}
///     == T_{w_k} T_1(u,s_{k-1}) ... T_{k-1}(u,s_1) T_{w_{k-1}}^{-1} T_k.
inline bool staircase_shift_check(int n, int k, const QRat& u, const std::vector<QRat>& sigma) {
    if (!(1 <= k && k < n)) throw std::invalid_argument("staircase_shift_check");
    if (static_cast<int>(sigma.size()) != k - 1)
        throw std::invalid_argument("staircase_shift_check: need k-1 parameters");
    HeckeQ lhs = t_longest(k + 1, n);
    for (int j = 2; j <= k; ++j) lhs *= baxterized(n, j, u, sigma[k - j]);
    lhs *= t_longest_inverse(k, n);
    HeckeQ rhs = t_longest(k, n);
    for (int j = 1; j <= k - 1; ++j) rhs *= baxterized(n, j, u, sigma[k - 1 - j]);
    rhs *= t_longest_inverse(k - 1 >= 1 ? k - 1 : 1, n);
    rhs *= HeckeQ::generator(n, k);
    return lhs == rhs;
}

} // namespace heckeq
