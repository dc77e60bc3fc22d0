#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "heckeq/hecke.hpp"
#include "heckeq/tableaux.hpp"

namespace heckeq {

/// Primitive idempotent E_T by the Dipper-James rule: starting from 1, each
/// step multiplies by (y_k - rho)/(sigma - rho) over the addable q-contents
/// rho of the previous shape other than the q-content sigma of the new cell.
/// The ambient algebra defaults to H_n for n = |T| but may be larger.
inline HeckeQ dipper_james(const StandardTableau& t, int ambient = -1) {
    const int n = t.size();
    if (ambient < 0) ambient = n;
    if (ambient < n) throw std::invalid_argument("dipper_james: ambient too small");
    // The scalar denominators are kept in a separate prefactor so the body
    // multiplies with Laurent coefficients only.
    HeckeQ body = HeckeQ::one(ambient);
    QRat prefactor(1);
    for (int k = 2; k <= n; ++k) {
        const Partition prev_shape = t.restricted(k - 1).shape();
        const Cell new_cell = t.cell_of(k);
        const QRat sigma = QRat::q_power(2 * new_cell.content());
        const HeckeQ y = jucys_murphy(k, ambient);
        for (const Cell& c : prev_shape.addable_cells()) {
            if (c == new_cell) continue;
            const QRat rho = QRat::q_power(2 * c.content());
            // distinct addable cells have distinct contents, so sigma != rho
            body = body * (y - rho * HeckeQ::one(ambient));
            prefactor = prefactor / (sigma - rho);
        }
    }
    return prefactor * body;
}

/// E_T from E_U via the resolvent: the rational function
/// E_U (u - sigma_n)/(u - y_n) is regular at u = sigma_n with value E_T. The
/// inverse of u - y_n comes from the generic linear solve.
inline HeckeQ idempotent_via_resolvent(const StandardTableau& u_tab, int new_content,
                                       int ambient = -1) {
    const int n = u_tab.size() + 1;
    if (ambient < 0) ambient = n;
    if (ambient < n) throw std::invalid_argument("idempotent_via_resolvent: ambient too small");
    const auto addable = u_tab.shape().addable_cells();
    const bool ok = std::any_of(addable.begin(), addable.end(),
                                [&](const Cell& c) { return c.content() == new_content; });
    if (!ok)
        throw PoleError("idempotent_via_resolvent: q^" + std::to_string(2 * new_content) +
                        " is not an addable q-content");
    const URat live = urat_var(Var::u);
    const URat sigma = urat_const(QRat::q_power(2 * new_content));
    const HeckeU res = resolvent(jucys_murphy(n, ambient));
    const HeckeU f = promote(dipper_james(u_tab, ambient)) * (live - sigma) * res;
    HeckeQ r(ambient);
    for (const auto& [w, c] : f.terms()) r.add_term(w, eval_at_q_power(c, new_content));
    return r;
}

/// Y_k(sigma_1,...,sigma_k; u)
///   = T_{w_k} T_k(sigma_1,u) T_{k-1}(sigma_2,u) ... T_1(sigma_k,u) T_{w_{k+1}}^{-1}
/// with the sigma_i the q-contents q^{2 c_i} and u live.
inline HeckeU y_element(int k, const std::vector<int>& contents, int n) {
    if (k < 1 || k >= n) throw std::out_of_range("y_element: need 1 <= k < n");
    if (static_cast<int>(contents.size()) != k)
        throw std::invalid_argument("y_element: need exactly k contents");
    const URat live = urat_var(Var::u);
    HeckeU r = t_longest<URat>(k, n);
    for (int i = 1; i <= k; ++i)
        r *= baxterized(n, k - i + 1, urat_const(QRat::q_power(2 * contents[i - 1])), live);
    return r * t_longest_inverse<URat>(k + 1, n);
}

/// F_n(u) = (u - sigma_n)/(u - sigma_1)
///          * prod_{k<n} (u - sigma_k)^2 / ((u - q^2 sigma_k)(u - q^{-2} sigma_k)),
/// the scalar that relates consecutive normalization factors.
inline URat fusion_step_function(const std::vector<int>& contents) {
    const int n = static_cast<int>(contents.size());
    if (n < 2) throw std::invalid_argument("fusion_step_function: need n >= 2");
    const URat live = urat_var(Var::u);
    auto sigma = [&](int k) { return urat_const(QRat::q_power(2 * contents[k - 1])); };
    URat f = (live - sigma(n)) / (live - sigma(1));
    for (int k = 1; k < n; ++k) {
        const URat d = live - sigma(k);
        const URat q2 = urat_const(QRat::q_power(2));
        const URat qm2 = urat_const(QRat::q_power(-2));
        f *= d * d / ((live - q2 * sigma(k)) * (live - qm2 * sigma(k)));
    }
    return f;
}

inline URat fusion_step_function(const StandardTableau& t) {
    return fusion_step_function(t.content_sequence());
}

/// Value F_n(sigma_n); equals f(mu)^{-1} f(lambda) for standard tableaux.
inline QRat fusion_step_value(const std::vector<int>& contents) {
    return eval_at_q_power(fusion_step_function(contents), contents.back());
}

inline QRat fusion_step_value(const StandardTableau& t) {
    return fusion_step_value(t.content_sequence());
}

/// One line of the optional fusion trace.
struct FusionStepLog {
    int chain = 0;           // index k of the evaluated chain
    int eval_content = 0;    // the substitution point is q^{2 eval_content}
    int max_den_degree = 0;  // largest reduced denominator degree before evaluation
    std::size_t terms = 0;   // basis support after the step
};

/// Primitive idempotent E_T as the consecutively evaluated product of
/// baxterized generators:
///   E_T = f(lambda) * prod_k (T_k(u_1,u_{k+1}) ... T_1(u_k,u_{k+1})) * T_{w_n}^{-1}
/// evaluated at u_1 = sigma_1, ..., u_n = sigma_n in that order. Chain k
/// holds every factor with u_{k+1} in second position; factors of later
/// chains carry u_{k+1} only in first position and stay regular there while
/// their own second variable is symbolic, so each chain is evaluated with a
/// single live variable. A pole in a reduced coefficient is a hard error.
inline HeckeQ fusion(const StandardTableau& t, int ambient = -1,
                     std::vector<FusionStepLog>* log = nullptr) {
    const int n = t.size();
    if (ambient < 0) ambient = n;
    if (ambient < n) throw std::invalid_argument("fusion: ambient too small");
    const std::vector<int> contents = t.content_sequence();
    // Accumulator kept as prefactor * body with Laurent body coefficients.
    // A global q-scalar leaves every reduced denominator in u untouched, so
    // the regularity of each evaluation is exactly the regularity of the
    // accumulated product itself.
    HeckeQ body = HeckeQ::one(ambient);
    QRat prefactor(1);
    for (int k = 1; k < n; ++k) {
        HeckeU p = promote(body);
        const URat live = urat_var(Var::u);
        for (int i = 1; i <= k; ++i)
            p *= baxterized(ambient, k - i + 1, urat_const(QRat::q_power(2 * contents[i - 1])),
                            live);
        FusionStepLog step;
        step.chain = k;
        step.eval_content = contents[k];
        HeckeQ value(ambient);
        for (const auto& [w, c] : p.terms()) {
            step.max_den_degree = std::max(step.max_den_degree, c.den().degree());
            value.add_term(w, eval_at_q_power(c, contents[k]));
        }
        const QRat den = ScalarOps<QRat>::common_denominator(value);
        if (!den.is_one()) {
            value = value * den;
            prefactor = prefactor / den;
        }
        step.terms = value.term_count();
        if (log) log->push_back(step);
        body = value;
    }
    return (prefactor * normalization_factor(t.shape())) *
           (body * t_longest_inverse<QRat>(n, ambient));
}

enum class IdemMethod { dipper_james, fusion };

struct IdempotentRecord {
    StandardTableau tableau;
    HeckeQ element;
    IdemMethod method;
};

inline IdempotentRecord make_idempotent(const StandardTableau& t, IdemMethod method) {
    return {t, method == IdemMethod::fusion ? fusion(t) : dipper_james(t), method};
}

/// Checks
///   E_U Y_k(sigma; u) ==
///   (u - sigma_1) prod_j ((u - q^2 sigma_j)(u - q^{-2} sigma_j)/(u - sigma_j)^2)
///     * E_U (u - y_{k+1})^{-1}
/// as an exact identity of rational-function-valued elements. The inverse of
/// u - y_{k+1} comes from generic linear algebra on powers of y_{k+1}; a
/// shared precomputed copy may be passed in since it only depends on k. The
/// content sequence may be overridden to exercise the negative direction.
inline bool y_element_resolvent_check(const StandardTableau& u_tab,
                                      std::optional<std::vector<int>> contents_override =
                                          std::nullopt,
                                      const HeckeU* shared_resolvent = nullptr) {
    const int k = u_tab.size();
    const int n = k + 1;
    const std::vector<int> contents =
        contents_override ? *contents_override : u_tab.content_sequence();
    if (static_cast<int>(contents.size()) != k)
        throw std::invalid_argument("y_element_resolvent_check: need k contents");

    const HeckeU e_u = promote(dipper_james(u_tab, n));
    const HeckeU lhs = e_u * y_element(k, contents, n);

    const URat live = urat_var(Var::u);
    auto sigma = [&](int j) { return urat_const(QRat::q_power(2 * contents[j - 1])); };
    URat pref = live - sigma(1);
    for (int j = 1; j <= k; ++j) {
        const URat d = live - sigma(j);
        pref *= (live - urat_const(QRat::q_power(2)) * sigma(j)) *
                (live - urat_const(QRat::q_power(-2)) * sigma(j)) / (d * d);
    }
    const HeckeU res = shared_resolvent ? *shared_resolvent : resolvent(jucys_murphy(n, n));
    return lhs == pref * e_u * res;
}

} // namespace heckeq
