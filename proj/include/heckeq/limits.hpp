#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "heckeq/hecke.hpp"
#include "heckeq/idempotents.hpp"
#include "heckeq/symgroup.hpp"

namespace heckeq {

/// q -> 1 specialization: every coefficient is evaluated at q = 1 and the
/// basis is re-keyed from T_w to w.
inline SnElement classical_limit(const HeckeQ& a) {
    SnElement r(a.n());
    for (const auto& [w, c] : a.terms()) {
        try {
            r.add_term(w, eval_q_one(c));
        } catch (const PoleError&) {
            std::string one_line;
            for (int v : w.one_line()) one_line += (one_line.empty() ? "" : " ") + std::to_string(v);
            throw PoleError("classical_limit: coefficient of T_[" + one_line +
                            "] has a pole at q = 1");
        }
    }
    return r;
}

/// Compares the q -> 1 limit of Y_k(q^{2c_1},...,q^{2c_k}; q^{2v}) with the
/// product phi_{1,k+1}(c_1,v) ... phi_{k,k+1}(c_k,v) in the group algebra.
/// The evaluation point v must be an integer so q^{2v} stays a Laurent
/// monomial; it must avoid the contents to keep every factor finite.
inline bool y_element_limit_compare(int k, const std::vector<int>& y_contents,
                                    const std::vector<int>& phi_contents, int v) {
    const int n = k + 1;
    const HeckeU y = y_element(k, y_contents, n);
    HeckeQ at_point(n);
    for (const auto& [w, c] : y.terms()) at_point.add_term(w, eval_at_q_power(c, v));
    const SnElement lhs = classical_limit(at_point);

    SnElementU rhs = SnElementU::one(n);
    for (int i = 1; i <= k; ++i)
        rhs *= sn_phi(n, i, k + 1, SnRatFunc(BigRational(phi_contents[i - 1])),
                      SnRatFunc(BigRational(v)));
    SnElement rhs_val(n);
    for (const auto& [w, c] : rhs.terms()) rhs_val.add_term(w, c.to_field());
    return lhs == rhs_val;
}

/// The same comparison at several random integer points.
inline bool y_element_limit_check(int k, const std::vector<int>& contents, std::mt19937& rng,
                                  int samples = 3) {
    std::uniform_int_distribution<int> dist(-25, 25);
    for (int s = 0; s < samples; ++s) {
        int v;
        do {
            v = dist(rng);
        } while (std::find(contents.begin(), contents.end(), v) != contents.end());
        if (!y_element_limit_compare(k, contents, contents, v)) return false;
    }
    return true;
}

} // namespace heckeq
