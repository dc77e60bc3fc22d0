#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "heckeq/hecke.hpp"
#include "heckeq/idempotents.hpp"
#include "heckeq/limits.hpp"
#include "heckeq/symgroup.hpp"
#include "heckeq/trace.hpp"

namespace heckeq {

/// One verified property with its instance count.
struct CheckLine {
    std::string name;
    bool passed = false;
    long instances = 0;
};

using CheckList = std::vector<CheckLine>;

namespace detail {

inline QRat random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 9);
    return QRat(BigRational(num(rng), den(rng)));
}

inline std::vector<QRat> distinct_rationals(std::mt19937& rng, int count) {
    std::vector<QRat> out;
    while (static_cast<int>(out.size()) < count) {
        QRat r = random_rational(rng);
        bool fresh = true;
        for (const QRat& x : out) fresh = fresh && !(x == r);
        if (fresh) out.push_back(r);
    }
    return out;
}

inline HeckeQ random_element(int n, std::mt19937& rng, int terms = 4) {
    const auto basis = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    HeckeQ r(n);
    for (int i = 0; i < terms; ++i) r.add_term(basis[pick(rng)], random_rational(rng));
    return r;
}

} // namespace detail

/// Generator relations, Jucys-Murphy structure, longest elements, baxterized
/// identities.
inline CheckList verify_hecke(int n, unsigned seed = 20240811) {
    std::mt19937 rng(seed);
    CheckList out;

    {
        CheckLine line{"hecke.defining_relations", true, 0};
        for (int m = 2; m <= n; ++m) {
            for (int i = 1; i < m; ++i) {
                const HeckeQ t = HeckeQ::generator(m, i);
                line.passed = line.passed &&
                              (t * t == HeckeQ::one(m) + QRat::t() * t);
                ++line.instances;
                if (i + 1 < m) {
                    const HeckeQ s = HeckeQ::generator(m, i + 1);
                    line.passed = line.passed && (t * s * t == s * t * s);
                    ++line.instances;
                }
                for (int j = i + 2; j < m; ++j) {
                    const HeckeQ s = HeckeQ::generator(m, j);
                    line.passed = line.passed && (t * s == s * t);
                    ++line.instances;
                }
            }
        }
        out.push_back(line);
    }
    {
        CheckLine line{"hecke.basis_associativity", true, 0};
        const int m = std::min(n, 3);
        const auto basis = all_permutations(m);
        for (const auto& a : basis)
            for (const auto& b : basis)
                for (const auto& c : basis) {
                    const HeckeQ ta = HeckeQ::basis(m, a), tb = HeckeQ::basis(m, b),
                                 tc = HeckeQ::basis(m, c);
                    line.passed = line.passed && ((ta * tb) * tc == ta * (tb * tc));
                    ++line.instances;
                }
        if (n >= 4) {
            const auto basis4 = all_permutations(4);
            std::uniform_int_distribution<std::size_t> pick(0, basis4.size() - 1);
            for (int i = 0; i < 200; ++i) {
                const HeckeQ ta = HeckeQ::basis(4, basis4[pick(rng)]);
                const HeckeQ tb = HeckeQ::basis(4, basis4[pick(rng)]);
                const HeckeQ tc = HeckeQ::basis(4, basis4[pick(rng)]);
                line.passed = line.passed && ((ta * tb) * tc == ta * (tb * tc));
                ++line.instances;
            }
        }
        out.push_back(line);
    }
    {
        CheckLine line{"hecke.jucys_murphy_commute_and_closed_form", true, 0};
        for (int m = 1; m <= n; ++m)
            for (int k = 1; k <= m; ++k) {
                const HeckeQ yk = jucys_murphy(k, m);
                line.passed = line.passed && (yk == jucys_murphy_closed(k, m));
                ++line.instances;
                for (int l = 1; l < k; ++l) {
                    const HeckeQ yl = jucys_murphy(l, m);
                    line.passed = line.passed && (yk * yl == yl * yk);
                    ++line.instances;
                }
            }
        out.push_back(line);
    }
    {
        CheckLine line{"hecke.longest_element_forms_and_square", true, 0};
        for (int k = 1; k <= n; ++k) {
            const HeckeQ tw = t_longest(k, n);
            line.passed = line.passed && (tw == t_longest_alt(k, n)) && (tw.term_count() == 1);
            HeckeQ prod = HeckeQ::one(n);
            for (int j = 1; j <= k; ++j) prod *= jucys_murphy(j, n);
            line.passed = line.passed && (tw * tw == prod);
            line.instances += 2;
        }
        out.push_back(line);
    }
    {
        CheckLine line{"hecke.yang_baxter", true, 0};
        const int m = std::min(std::max(n, 3), 4);
        for (int trial = 0; trial < 20; ++trial) {
            const auto v = detail::distinct_rationals(rng, 3);
            for (int i = 1; i + 1 < m; ++i) {
                const HeckeQ lhs = baxterized(m, i, v[0], v[1]) * baxterized(m, i + 1, v[0], v[2]) *
                                   baxterized(m, i, v[1], v[2]);
                const HeckeQ rhs = baxterized(m, i + 1, v[1], v[2]) * baxterized(m, i, v[0], v[2]) *
                                   baxterized(m, i + 1, v[0], v[1]);
                line.passed = line.passed && (lhs == rhs);
                ++line.instances;
            }
        }
        out.push_back(line);
    }
    {
        CheckLine line{"hecke.baxterized_inversion", true, 0};
        const URat live = urat_var(Var::u);
        for (int trial = 0; trial < 5; ++trial) {
            const URat x = urat_const(detail::random_rational(rng));
            const HeckeU prod = baxterized(2, 1, x, live) * baxterized(2, 1, live, x);
            const URat q2 = urat_const(QRat::q_power(2)), qm2 = urat_const(QRat::q_power(-2));
            const URat expected = (x - q2 * live) * (x - qm2 * live) / ((x - live) * (x - live));
            line.passed = line.passed && (prod == expected * HeckeU::one(2));
            ++line.instances;
        }
        out.push_back(line);
    }
    {
        CheckLine line{"hecke.longest_conjugation", true, 0};
        for (int k = 2; k <= n; ++k)
            for (int j = 1; j < k; ++j) {
                const auto v = detail::distinct_rationals(rng, 2);
                line.passed = line.passed && longest_conjugation_check(n, k, j, v[0], v[1]);
                ++line.instances;
            }
        out.push_back(line);
    }
    {
        CheckLine line{"hecke.staircase_shift", true, 0};
        for (int k = 1; k < n; ++k) {
            const auto v = detail::distinct_rationals(rng, k);
            line.passed = line.passed &&
                          staircase_shift_check(n, k, v[0],
                                                std::vector<QRat>(v.begin() + 1, v.end()));
            ++line.instances;
        }
        out.push_back(line);
    }
    return out;
}

/// Idempotent system and the fusion/Dipper-James equivalence.
inline CheckList verify_idempotents(int n) {
    CheckList out;
    std::vector<std::vector<StandardTableau>> by_size(n + 1);
    for (int m = 1; m <= n; ++m) by_size[m] = all_syt(m);

    std::vector<HeckeQ> dj;
    for (const auto& t : by_size[n]) dj.push_back(dipper_james(t));

    {
        CheckLine line{"idempotents.fusion_equals_dipper_james", true, 0};
        for (std::size_t i = 0; i < by_size[n].size(); ++i) {
            line.passed = line.passed && (fusion(by_size[n][i]) == dj[i]);
            ++line.instances;
        }
        out.push_back(line);
    }
    {
        CheckLine line{"idempotents.idempotency", true, 0};
        for (const HeckeQ& e : dj) {
            line.passed = line.passed && (e * e == e);
            ++line.instances;
        }
        out.push_back(line);
    }
    if (n <= 4) {
        CheckLine line{"idempotents.orthogonality", true, 0};
        for (std::size_t i = 0; i < dj.size(); ++i)
            for (std::size_t j = 0; j < dj.size(); ++j) {
                if (i == j) continue;
                line.passed = line.passed && (dj[i] * dj[j]).is_zero();
                ++line.instances;
            }
        out.push_back(line);
    }
    {
        CheckLine line{"idempotents.completeness", true, 1};
        HeckeQ sum(n);
        for (const HeckeQ& e : dj) sum += e;
        line.passed = sum == HeckeQ::one(n);
        out.push_back(line);
    }
    {
        CheckLine line{"idempotents.eigenvalues", true, 0};
        for (std::size_t i = 0; i < dj.size(); ++i) {
            const auto contents = by_size[n][i].content_sequence();
            for (int k = 1; k <= n; ++k) {
                const HeckeQ y = jucys_murphy(k, n);
                const HeckeQ scaled = QRat::q_power(2 * contents[k - 1]) * dj[i];
                line.passed = line.passed && (y * dj[i] == scaled) && (dj[i] * y == scaled);
                ++line.instances;
            }
        }
        out.push_back(line);
    }
    if (n >= 2) {
        CheckLine line{"idempotents.branching", true, 0};
        for (const auto& u : by_size[n - 1]) {
            HeckeQ sum(n);
            for (const Cell& c : u.shape().addable_cells()) sum += dipper_james(u.with_entry(c), n);
            line.passed = line.passed && (sum == dipper_james(u, n));
            ++line.instances;
        }
        out.push_back(line);
    }
    {
        CheckLine line{"idempotents.resolvent_route", true, 0};
        const int m = std::min(n, 3);
        if (m >= 2)
            for (const auto& u : by_size[m - 1])
                for (const Cell& c : u.shape().addable_cells()) {
                    line.passed = line.passed &&
                                  (idempotent_via_resolvent(u, c.content()) ==
                                   dipper_james(u.with_entry(c)));
                    ++line.instances;
                }
        out.push_back(line);
    }
    {
        CheckLine line{"idempotents.y_element_resolvent_identity", true, 0};
        for (int k = 1; k <= std::min(n - 1, 3); ++k) {
            const HeckeU shared = resolvent(jucys_murphy(k + 1, k + 1));
            for (const auto& u : by_size[k]) {
                line.passed = line.passed && y_element_resolvent_check(u, std::nullopt, &shared);
                ++line.instances;
            }
        }
        out.push_back(line);
    }
    {
        CheckLine line{"idempotents.fusion_step_value", true, 0};
        for (int m = 2; m <= n; ++m)
            for (const auto& t : by_size[m]) {
                const Partition mu = t.restricted(m - 1).shape();
                line.passed = line.passed &&
                              (fusion_step_value(t) * normalization_factor(mu) ==
                               normalization_factor(t.shape()));
                ++line.instances;
            }
        out.push_back(line);
    }
    {
        CheckLine line{"idempotents.normalization_factor_forms", true, 0};
        for (int m = 1; m <= std::min(n + 1, 6); ++m)
            for (const Partition& p : enumerate_partitions(m)) {
                line.passed = line.passed &&
                              (normalization_factor(p) == normalization_factor_hook_form(p));
                ++line.instances;
            }
        out.push_back(line);
    }
    return out;
}

/// Conditional-expectation axioms, the traced resolvent, and the quantum
/// dimension identities.
inline CheckList verify_trace(int n, unsigned seed = 20240812) {
    std::mt19937 rng(seed);
    CheckList out;
    const int mmax = std::min(n - 1, 3);
    const URat q_var = urat_var(Var::Q);

    {
        CheckLine line{"trace.scalar_rule", true, 0}; // Tr(X) = Q X on basis X
        for (int m = 1; m <= mmax; ++m)
            for (const auto& x : all_permutations(m)) {
                const HeckeU lhs = cond_trace(embed(promote(HeckeQ::basis(m, x)), m + 1), q_var);
                line.passed = line.passed && (lhs == q_var * promote(HeckeQ::basis(m, x)));
                ++line.instances;
            }
        out.push_back(line);
    }
    {
        CheckLine line{"trace.generator_rule", true, 0}; // Tr(T_m) = 1
        for (int m = 1; m <= mmax; ++m) {
            const HeckeU lhs = cond_trace(promote(HeckeQ::generator(m + 1, m)), q_var);
            line.passed = line.passed && (lhs == HeckeU::one(m));
            ++line.instances;
        }
        out.push_back(line);
    }
    {
        CheckLine line{"trace.module_property", true, 0}; // Tr(XZY) = X Tr(Z) Y
        for (int m = 1; m <= mmax; ++m)
            for (const auto& z : all_permutations(m + 1)) {
                const HeckeU tz = promote(HeckeQ::basis(m + 1, z));
                for (int trial = 0; trial < 2; ++trial) {
                    const HeckeU x = embed(promote(detail::random_element(m, rng, 3)), m + 1);
                    const HeckeU y = embed(promote(detail::random_element(m, rng, 3)), m + 1);
                    const HeckeU lhs = cond_trace(x * tz * y, q_var);
                    const HeckeU rhs =
                        restrict_to(x, m) * cond_trace(tz, q_var) * restrict_to(y, m);
                    line.passed = line.passed && (lhs == rhs);
                    ++line.instances;
                }
            }
        out.push_back(line);
    }
    {
        CheckLine line{"trace.conjugation_invariance", true, 0};
        for (int m = 1; m <= mmax; ++m)
            for (const auto& x : all_permutations(m)) {
                const HeckeU tx = embed(promote(HeckeQ::basis(m, x)), m + 1);
                const HeckeU tm = HeckeU::generator(m + 1, m);
                const HeckeU tm_inv = gen_inverse<URat>(m + 1, m);
                const HeckeU plus = cond_trace(tm * tx * tm_inv, q_var);
                const HeckeU minus = cond_trace(tm_inv * tx * tm, q_var);
                HeckeU expected(std::max(m, 1));
                if (m == 1) {
                    expected = markov_trace(promote(HeckeQ::basis(m, x)), q_var) * HeckeU::one(1);
                    line.passed = line.passed &&
                                  (markov_trace(plus, q_var) * HeckeU::one(1) == expected) &&
                                  (markov_trace(minus, q_var) * HeckeU::one(1) == expected);
                } else {
                    expected = embed(cond_trace(promote(HeckeQ::basis(m, x)), q_var), m);
                    line.passed = line.passed && (plus == expected) && (minus == expected);
                }
                line.instances += 2;
            }
        out.push_back(line);
    }
    {
        CheckLine line{"trace.markov_property", true, 0};
        for (int m = 1; m <= mmax; ++m)
            for (const auto& z : all_permutations(m + 1)) {
                const HeckeU tz = promote(HeckeQ::basis(m + 1, z));
                const HeckeU tm = HeckeU::generator(m + 1, m);
                const HeckeU lhs = cond_trace(cond_trace(tm * tz, q_var), q_var);
                const HeckeU rhs = cond_trace(cond_trace(tz * tm, q_var), q_var);
                line.passed = line.passed && (lhs == rhs);
                ++line.instances;
            }
        out.push_back(line);
    }
    {
        CheckLine line{"trace.traced_resolvent", true, 0};
        for (int m = 0; m <= mmax; ++m) {
            line.passed = line.passed && traced_resolvent_check(m, rng, 5);
            ++line.instances;
        }
        out.push_back(line);
    }
    {
        CheckLine line{"trace.resolvent_recursion", true, 0};
        for (int m = 1; m <= mmax; ++m) {
            line.passed = line.passed && resolvent_recursion_check(m);
            ++line.instances;
        }
        out.push_back(line);
    }
    {
        CheckLine line{"trace.composite_is_tracial", true, 0};
        const int m = std::min(n, 4);
        for (int trial = 0; trial < 25; ++trial) {
            const HeckeU a = promote(detail::random_element(m, rng, 4));
            const HeckeU b = promote(detail::random_element(m, rng, 4));
            line.passed = line.passed &&
                          (markov_trace(a * b, q_var) == markov_trace(b * a, q_var));
            ++line.instances;
        }
        out.push_back(line);
    }
    {
        CheckLine line{"trace.qdim_shape_invariance", true, 0};
        for (const Partition& p : enumerate_partitions(n)) {
            const auto ts = enumerate_syt(p);
            const TraceScalar first = qdim(ts[0]);
            for (const auto& t : ts) {
                line.passed = line.passed && (qdim(t) == first);
                ++line.instances;
            }
        }
        out.push_back(line);
    }
    if (n <= 4) {
        CheckLine line{"trace.qdim_additivity", true, 1};
        TraceScalar sum(0);
        for (const auto& t : all_syt(n)) sum += qdim(t);
        URat expected(1);
        for (int i = 0; i < n; ++i) expected *= q_var;
        line.passed = sum == expected;
        out.push_back(line);
    }
    if (n <= 4) {
        CheckLine line{"trace.qdim_normalization", true, 0};
        for (const auto& t : all_syt(n)) {
            line.passed = line.passed && qdim_normalization_check(t);
            ++line.instances;
        }
        out.push_back(line);
    }
    return out;
}

/// q -> 1 limits against the symmetric-group oracle.
inline CheckList verify_limits(int n, unsigned seed = 20240813) {
    std::mt19937 rng(seed);
    CheckList out;
    const int nn = std::min(n, 4); // Hecke-side limits
    {
        CheckLine line{"limits.sn_idempotent_system", true, 0};
        std::vector<SnElement> es;
        std::vector<StandardTableau> ts = all_syt(n);
        for (const auto& t : ts) es.push_back(symmetric_group_fusion(t));
        SnElement sum(n);
        for (std::size_t i = 0; i < es.size(); ++i) {
            line.passed = line.passed && (es[i] * es[i] == es[i]);
            ++line.instances;
            const auto contents = ts[i].content_sequence();
            for (int k = 1; k <= n; ++k) {
                line.passed = line.passed &&
                              (sn_jucys_murphy(k, n) * es[i] ==
                               es[i] * BigRational(contents[k - 1]));
                ++line.instances;
            }
            sum += es[i];
        }
        line.passed = line.passed && (sum == SnElement::one(n));
        ++line.instances;
        if (n <= 4)
            for (std::size_t i = 0; i < es.size(); ++i)
                for (std::size_t j = 0; j < es.size(); ++j) {
                    if (i == j) continue;
                    line.passed = line.passed && (es[i] * es[j]).is_zero();
                    ++line.instances;
                }
        out.push_back(line);
    }
    {
        CheckLine line{"limits.hecke_limit_matches_oracle", true, 0};
        for (const auto& t : all_syt(nn)) {
            line.passed = line.passed &&
                          (classical_limit(fusion(t)) == symmetric_group_fusion(t));
            ++line.instances;
        }
        out.push_back(line);
    }
    {
        CheckLine line{"limits.jucys_murphy_limit", true, 0};
        for (int k = 1; k <= nn; ++k) {
            const HeckeQ normalized =
                (jucys_murphy(k, nn) - HeckeQ::one(nn)) / QRat::t();
            line.passed = line.passed && (classical_limit(normalized) == sn_jucys_murphy(k, nn));
            ++line.instances;
        }
        out.push_back(line);
    }
    {
        CheckLine line{"limits.y_element_limit", true, 0};
        for (int k = 1; k <= std::min(n - 1, 3); ++k)
            for (const auto& u : all_syt(k)) {
                line.passed = line.passed &&
                              y_element_limit_check(k, u.content_sequence(), rng, 3);
                ++line.instances;
            }
        out.push_back(line);
    }
    return out;
}

/// Runs the named suite ("hecke", "idempotents", "trace", "limits" or "all").
inline CheckList verify_suite(const std::string& suite, int n) {
    CheckList out;
    auto append = [&](CheckList more) {
        for (auto& line : more) out.push_back(std::move(line));
    };
    if (suite == "hecke" || suite == "all") append(verify_hecke(n));
    if (suite == "idempotents" || suite == "all") append(verify_idempotents(n));
    if (suite == "trace" || suite == "all") append(verify_trace(n));
    if (suite == "limits" || suite == "all") append(verify_limits(n));
    if (out.empty()) throw std::invalid_argument("verify: unknown suite '" + suite + "'");
    return out;
}

} // namespace heckeq
