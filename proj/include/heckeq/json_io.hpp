#pragma once

#include <string>

#include <json.hpp>

#include "heckeq/hecke.hpp"
#include "heckeq/scalar_io.hpp"
#include "heckeq/symgroup.hpp"

namespace heckeq {

inline constexpr int kSchemaVersion = 1;

/// {"schema":1, "n":3, "scalar":"qrat",
///  "terms":[{"perm":[2,1,3], "coeff":"(q^2-1)/(q^2+1)"}]}
/// Terms are sorted by one-line notation, so exports are deterministic and
/// re-exporting an imported element reproduces the bytes.
inline nlohmann::json element_to_json(const HeckeQ& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : a.terms())
        terms.push_back({{"perm", w.one_line()}, {"coeff", render_qrat(c)}});
    return {{"schema", kSchemaVersion}, {"n", a.n()}, {"scalar", "qrat"}, {"terms", terms}};
}

inline nlohmann::json element_to_json(const SnElement& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : a.terms()) {
        std::ostringstream os;
        os << c;
        terms.push_back({{"perm", w.one_line()}, {"coeff", os.str()}});
    }
    return {{"schema", kSchemaVersion},
            {"n", a.n()},
            {"scalar", "rational"},
            {"group_algebra", true},
            {"terms", terms}};
}

inline HeckeQ element_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchemaVersion)
        throw ParseError("element: missing or unsupported schema version");
    if (!j.contains("scalar") || j["scalar"] != "qrat")
        throw ParseError("element: expected scalar kind \"qrat\"");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("element: missing n");
    HeckeQ a(j["n"].get<int>());
    for (const auto& term : j.at("terms")) {
        const auto perm = term.at("perm").get<std::vector<int>>();
        a.add_term(Permutation(perm), parse_qrat(term.at("coeff").get<std::string>()));
    }
    return a;
}

/// "coeff*T[word]" terms sorted by permutation; the word is the
/// lexicographically smallest reduced word.
template <class S, class RenderFn>
std::string render_element(const HeckeElement<S>& a, RenderFn&& render_scalar) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : a.terms()) {
        std::string cs = render_scalar(c);
        if (detail::coeff_needs_parens(cs)) cs = "(" + cs + ")";
        std::string word;
        for (int i : w.reduced_word()) word += (word.empty() ? "" : " ") + std::to_string(i);
        if (!out.empty()) out += " + ";
        out += cs + "*T[" + word + "]";
    }
    return out;
}

inline std::string render_element(const HeckeQ& a) {
    return render_element(a, [](const QRat& c) { return render_qrat(c); });
}

inline std::string render_element(const HeckeU& a) {
    return render_element(a, [](const URat& c) { return render_urat(c); });
}

} // namespace heckeq
