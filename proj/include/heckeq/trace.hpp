#pragma once

#include <random>
#include <vector>

#include "heckeq/hecke.hpp"
#include "heckeq/idempotents.hpp"

namespace heckeq {

/// Conditional expectation Tr_{m+1}: H_{m+1} -> H_m, realized on the basis
/// through the coset decomposition w = x (s_m s_{m-1} ... s_j) with x in S_m:
///   Tr_{m+1}(T_x T_m T_{m-1} ... T_j) = T_x T_{m-1} ... T_j,
///   Tr_{m+1}(T_x) = Q T_x.
/// The trace parameter is passed as a scalar so it can stay symbolic (a live
/// Q) or be instantiated while another variable is live.
template <class S>
HeckeElement<S> cond_trace(const HeckeElement<S>& a, const S& trace_param) {
    const int n = a.n();
    if (n < 2) throw std::invalid_argument("cond_trace: needs an element of H_n with n >= 2");
    const int m = n - 1;
    HeckeElement<S> r(m);
    for (const auto& [w, c] : a.terms()) {
        if (w(n) == n) {
            r.add_term(w.restricted(m), c * trace_param);
            continue;
        }
        const int j = w.inverse()(n); // position of the value n
        std::vector<int> x;
        x.reserve(m);
        for (int i = 1; i <= n; ++i)
            if (i != j) x.push_back(w(i));
        HeckeElement<S> part = HeckeElement<S>::basis(m, Permutation(std::move(x)));
        for (int g = m - 1; g >= j; --g) part = part.times_generator(g);
        for (const auto& [v, d] : part.terms()) r.add_term(v, d * c);
    }
    return r;
}

/// Ocneanu-Markov trace: the composition Tr_1 Tr_2 ... Tr_n down to a scalar.
template <class S>
S markov_trace(HeckeElement<S> a, const S& trace_param) {
    while (a.n() > 1) a = cond_trace(a, trace_param);
    return trace_param * a.coeff(Permutation(1));
}

/// Scalars produced by the symbolic trace: rational functions in the live
/// parameter Q over Q(q). Traces of polynomial inputs stay polynomial in Q.
using TraceScalar = URat;

inline TraceScalar markov_trace_symbolic(const HeckeQ& a) {
    return markov_trace(promote(a), urat_var(Var::Q));
}

/// qdim T = Tr_n(E_T).
inline TraceScalar qdim(const StandardTableau& t) {
    return markov_trace_symbolic(dipper_james(t));
}

/// Z_{m+1}(u) = Tr_{m+1}((u - y_{m+1})^{-1}), computed literally: the
/// resolvent of y_{m+1}, then one conditional expectation. Elements of H_0
/// are represented as scalar multiples of the identity of H_1.
inline HeckeU traced_resolvent_via_trace(int m, const URat& q_value) {
    const int n = std::max(m + 1, 1);
    const HeckeU res = resolvent(jucys_murphy(m + 1, n));
    if (m == 0) return markov_trace(res, q_value) * HeckeU::one(1);
    return cond_trace(res, q_value);
}

/// The closed form of the same function:
///   Z_{m+1}(u) = (tQ + u - 1)/(t u (u-1))
///     * ( prod_{k<=m} (u - y_k)^2 ((u - q^2 y_k)(u - q^{-2} y_k))^{-1}
///         - (1 - tQ)(u-1)/(tQ + u - 1) ).
inline HeckeU traced_resolvent_closed_form(int m, const URat& q_value) {
    const int nm = std::max(m, 1);
    const URat live = urat_var(Var::u);
    const URat t = urat_const(QRat::t());
    const HeckeU one = HeckeU::one(nm);
    HeckeU prod = one;
    for (int k = 1; k <= m; ++k) {
        const HeckeU y = promote(jucys_murphy(k, nm));
        const HeckeU a = live * one - y;
        const HeckeU b = (live * one - urat_const(QRat::q_power(2)) * y) *
                         (live * one - urat_const(QRat::q_power(-2)) * y);
        prod = prod * a * a * invert(b);
    }
    const URat lead = (t * q_value + live - URat(1)) / (t * live * (live - URat(1)));
    const URat tail = (URat(1) - t * q_value) * (live - URat(1)) / (t * q_value + live - URat(1));
    return lead * (prod - tail * one);
}

/// Both routes to Z_{m+1}(u), compared exactly at several rational values of
/// the trace parameter. The identity is linear in Q, so any two sample points
/// already separate the sides; the extra samples are straight margin. The
/// Q-independent pieces (the resolvent and the commuting product) are built
/// once and reused across samples.
inline bool traced_resolvent_check(int m, std::mt19937& rng, int samples = 5) {
    const int n = std::max(m + 1, 1);
    const int nm = std::max(m, 1);
    const HeckeU res = resolvent(jucys_murphy(m + 1, n));
    const URat live = urat_var(Var::u);
    const URat t = urat_const(QRat::t());
    const HeckeU one_m = HeckeU::one(nm);
    HeckeU prod = one_m;
    for (int k = 1; k <= m; ++k) {
        const HeckeU y = promote(jucys_murphy(k, nm));
        const HeckeU a = live * one_m - y;
        const HeckeU b = (live * one_m - urat_const(QRat::q_power(2)) * y) *
                         (live * one_m - urat_const(QRat::q_power(-2)) * y);
        prod = prod * a * a * invert(b);
    }

    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 12);
    for (int s = 0; s < samples; ++s) {
        const URat q_value = urat_const(QRat(BigRational(num(rng), den(rng))));
        const HeckeU via_trace =
            m == 0 ? markov_trace(res, q_value) * HeckeU::one(1) : cond_trace(res, q_value);
        const URat lead =
            (t * q_value + live - URat(1)) / (t * live * (live - URat(1)));
        const URat tail =
            (URat(1) - t * q_value) * (live - URat(1)) / (t * q_value + live - URat(1));
        if (via_trace != lead * (prod - tail * one_m)) return false;
    }
    return true;
}

/// Resolvent recursion behind the closed form:
///   (u - y_{m+1})^{-1} = T_m (u - y_m)^{-1} T_m^{-1}
///     + (u - y_m)^{-1} (T_m^{-1} + t u (u - y_{m+1})^{-1}) t y_m (u - y_m)^{-1}.
inline bool resolvent_recursion_check(int m) {
    if (m < 1 || m > 3) throw std::invalid_argument("resolvent_recursion_check: need 1 <= m <= 3");
    const int n = m + 1;
    const URat live = urat_var(Var::u);
    const URat t = urat_const(QRat::t());
    const HeckeU y_m = promote(jucys_murphy(m, n));
    const HeckeU res_next = resolvent(jucys_murphy(m + 1, n));
    const HeckeU res_m = resolvent(jucys_murphy(m, n));
    const HeckeU t_m = HeckeU::generator(n, m);
    const HeckeU t_m_inv = gen_inverse<URat>(n, m);
    const HeckeU rhs = t_m * res_m * t_m_inv +
                       res_m * (t_m_inv + (t * live) * res_next) * (t * (y_m * res_m));
    return res_next == rhs;
}

/// f(lambda) == qdim(T) * prod_k sigma_k (Q + (sigma_k - 1)/t)^{-1}, with Q
/// kept symbolic; the Q-dependence must cancel identically.
inline bool qdim_normalization_check(const StandardTableau& t) {
    const TraceScalar qd = qdim(t);
    const URat q_var = urat_var(Var::Q);
    const QRat t_scalar = QRat::t();
    URat factor(1);
    for (int c : t.content_sequence()) {
        const QRat sigma = QRat::q_power(2 * c);
        factor *= urat_const(sigma) / (q_var + urat_const((sigma - QRat(1)) / t_scalar));
    }
    return urat_const(normalization_factor(t.shape())) == qd * factor;
}

} // namespace heckeq
