#pragma once

// One-shot queries behind the command-line tool. Each returns a JSON object;
// the tool prints it as JSON or as a markdown list. Preconditions violated by
// the input (an element where an automorphism is needed, an element outside
// the commutator subgroup) surface as the module's own exception.

#include "solvknot/expr.hpp"
#include "solvknot/g6_aut.hpp"
#include "solvknot/gamma_aut.hpp"
#include "solvknot/knot.hpp"
#include "solvknot/report.hpp"

#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace solvknot::query {

using Json = report::Json;
using report::to_json;

namespace detail {

inline Json order_json(std::optional<long long> o) { return o ? Json(*o) : Json("infinite"); }

inline Json table_json(const FiniteGroupTable<AffineIso>& T, const std::vector<std::string>& labels) {
    Json mult = Json::array();
    for (std::size_t i = 0; i < T.order(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < T.order(); ++j) row.push_back(T.mul(i, j));
        mult.push_back(row);
    }
    Json classes = Json::array();
    for (const auto& c : T.conjugacy_classes()) classes.push_back(c);
    Json orders = Json::array();
    for (std::size_t i = 0; i < T.order(); ++i) orders.push_back(T.element_order(i));
    return Json{{"order", T.order()}, {"labels", labels}, {"elementOrders", orders},
                {"multiplication", mult}, {"classes", classes}, {"center", T.center()}};
}

inline void require_automorphism(const expr::Expression& e, expr::Context c, const std::string& text) {
    if (expr::is_element_expression(e, c) && !e.factors.empty())
        throw std::invalid_argument("'" + text + "' is a group element; an automorphism expression is needed here");
}

}  // namespace detail

// ---- G6 -------------------------------------------------------------------------

inline Json g6_out_table() {
    const auto& out = g6::out_g6();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < out.table.order(); ++i) labels.push_back(out.section(i).str());
    Json j = detail::table_json(out.table, labels);
    j["group"] = "Out(G6)";
    j["labelMeaning"] = "affine representative (translation mod T, linear part) of each outer class";
    return j;
}

inline Json g6_order(const std::string& text) {
    auto v = expr::eval_g6(text);
    return Json{{"context", "G6"},
                {"expression", text},
                {"kind", v.isElement ? "element" : "automorphism"},
                {"value", v.value.str()},
                {"order", detail::order_json(g6::element_order(v.value))}};
}

inline Json g6_centralizer(const std::string& text) {
    auto e = expr::parse_expression(text, expr::Context::G6);
    detail::require_automorphism(e, expr::Context::G6, text);
    AffineIso phi = expr::eval_g6(e).value;
    auto C = g6::centralizer(phi);
    auto N = g6::normalizer_cyclic(phi);
    return Json{{"context", "G6"},
                {"expression", text},
                {"automorphism", phi.str()},
                {"centralizer", C.str()},
                {"normalizerOfCyclic", N.str()},
                {"normalizerEqualsCentralizer", N == C},
                {"centralizerActsOrientably", g6::acts_orientably(C)}};
}

inline Json g6_meridianal(const std::string& text) {
    auto e = expr::parse_expression(text, expr::Context::G6);
    detail::require_automorphism(e, expr::Context::G6, text);
    AffineIso phi = expr::eval_g6(e).value;
    const auto& out = g6::out_g6();
    const std::size_t lbl = out.label(phi);
    bool mer = g6::is_meridianal(phi);
    Json j{{"context", "G6"},
           {"expression", text},
           {"automorphism", phi.str()},
           {"meridianal", mer},
           {"gl2Order", g6::f2_order(g6::gl2_image(phi))},
           {"h1Action", to_json(g6::h1_matrix(phi))},
           {"outerLabel", lbl},
           {"orientationPreserving", det(phi.linear()) == 1}};
    if (mer) {
        std::string cls = "orientation-reversing";
        for (const auto& c : g6::meridianal_classes()) {
            if (std::find(c.members.begin(), c.members.end(), lbl) == c.members.end()) continue;
            auto has = [&](const std::string& w) {
                return std::find(c.members.begin(), c.members.end(), out.label(w)) != c.members.end();
            };
            cls = has("ja") ? "[ja]" : has("jb") ? "[jb]" : "?";
        }
        j["class"] = cls;
    }
    return j;
}

// ---- Gamma(e, eta) ----------------------------------------------------------------

inline std::optional<long long> gamma_order(const nil::GammaAutomorphism& phi) {
    // phi^k acts trivially on P exactly when k is a multiple of the order of
    // the induced map; a nontrivial phi^k is then g -> g z^{f(g)} and has
    // infinite order.
    auto k = affine_order(phi.p_image());
    if (!k) return std::nullopt;
    if (phi.pow(*k) == nil::GammaAutomorphism::identity(phi.group())) return k;
    return std::nullopt;
}

inline std::optional<long long> gamma_element_order(const nil::AffNil& g) {
    if (g.is_identity()) return 1;
    auto k = affine_order(g.projection());
    if (!k) return std::nullopt;
    return g.pow(*k).is_identity() ? k : std::nullopt;
}

// A flat "key = value" file naming one group: keys e and eta.
inline nil::GammaGroup parse_gamma_group_config(std::istream& in) {
    std::optional<long long> e;
    std::optional<int> eta;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw report::ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::istringstream k(line.substr(0, eq)), v(line.substr(eq + 1));
        std::string key;
        k >> key;
        long long value = 0;
        std::string rest;
        if (!(v >> value) || (v >> rest))
            throw report::ConfigError("line " + std::to_string(lineno) + ": bad value for " + key);
        if (key == "e") e = value;
        else if (key == "eta") eta = static_cast<int>(value);
        else throw report::ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (!e || !eta) throw report::ConfigError("group config needs both e and eta");
    try {
        return nil::GammaGroup(*e, *eta);
    } catch (const std::invalid_argument& x) {
        throw report::ConfigError(x.what());
    }
}

inline Json gamma_head(const nil::GammaGroup& G, const std::string& text) {
    return Json{{"context", "Gamma" + G.tag()}, {"q", G.q()}, {"expression", text}};
}

inline Json gamma_out_table(const nil::GammaGroup& G) {
    auto out = nil::out_gamma(G);
    std::vector<std::string> labels;
    for (const auto& r : out.reps) labels.push_back(r.str());
    Json j = detail::table_json(out.table, labels);
    j["group"] = "Out(Gamma" + G.tag() + ")";
    j["labelMeaning"] = "a representative automorphism of each outer class";
    return j;
}

inline Json gamma_order(const nil::GammaGroup& G, const std::string& text) {
    Json j = gamma_head(G, text);
    auto v = expr::eval_gamma(text, G);
    if (auto* g = std::get_if<nil::AffNil>(&v)) {
        j["kind"] = "element";
        j["value"] = g->str();
        j["order"] = detail::order_json(gamma_element_order(*g));
    } else {
        const auto& phi = std::get<nil::GammaAutomorphism>(v);
        j["kind"] = "automorphism";
        j["value"] = phi.str();
        j["order"] = detail::order_json(gamma_order(phi));
    }
    return j;
}

inline nil::GammaAutomorphism gamma_automorphism(const nil::GammaGroup& G, const std::string& text) {
    auto e = expr::parse_expression(text, expr::Context::Gamma);
    auto v = expr::eval_gamma(e, G);
    if (auto* g = std::get_if<nil::AffNil>(&v)) {
        if (!e.factors.empty())
            throw std::invalid_argument("'" + text + "' is a group element; an automorphism expression is needed here");
        return nil::GammaAutomorphism::identity(G);
    }
    return std::get<nil::GammaAutomorphism>(v);
}

// Centralizer and cyclic normalizer of phi in Aut(Gamma), as their images in Aff(2).
inline Json gamma_centralizer(const nil::GammaGroup& G, const std::string& text) {
    const auto phi = gamma_automorphism(G, text);
    const auto image = nil::aut_gamma_image(G);
    const auto amb = nil::p_normalizer_ambient();
    auto C = centralizer_in(amb, phi.p_image()).intersection(image);
    auto N = cyclic_normalizer_in(amb, phi.p_image()).intersection(image);
    Json j = gamma_head(G, text);
    j["automorphism"] = phi.str();
    j["centralizer"] = C.str();
    j["normalizerOfCyclic"] = N.str();
    j["normalizerEqualsCentralizer"] = N == C;
    j["note"] = "subgroups of Aut(Gamma) given by their images in Aff(2)";
    return j;
}

inline Json gamma_meridianal(const nil::GammaGroup& G, const std::string& text) {
    const auto phi = gamma_automorphism(G, text);
    auto out = nil::out_gamma(G);
    const std::size_t lbl = out.label(phi);
    bool inR = false;
    for (const auto& c : nil::meridianal_classes_gamma(out))
        if (c.containsR && std::find(c.members.begin(), c.members.end(), lbl) != c.members.end()) inR = true;
    Json j = gamma_head(G, text);
    j["automorphism"] = phi.str();
    j["meridianal"] = nil::is_meridianal_gamma(phi);
    j["h1Factors"] = to_json(nil::h1_gamma(G).factors);
    j["h1Action"] = to_json(phi.h1_matrix());
    j["outerLabel"] = lbl;
    j["inClassOfR"] = inR;
    return j;
}

// ---- weight orbits ----------------------------------------------------------------

// family: "g+", "g-" (word in x, y, z) or "pi(e,eta)" (word in u, v, z).
inline Json orbit(const std::string& family, const std::string& word) {
    auto K = knot::parse_descriptor(family);
    if (K.family == knot::KnotFamily::Fox) throw std::invalid_argument("no weight-orbit normal form for the Fox group");
    if (K.family == knot::KnotFamily::Pi) {
        nil::GammaGroup G(K.e, K.eta);
        auto e = expr::parse_expression(word, expr::Context::Gamma);
        if (!expr::is_element_expression(e, expr::Context::Gamma))
            throw std::invalid_argument("'" + word + "' is not a word in u, v, z");
        auto g = std::get<nil::AffNil>(expr::eval_gamma(e, G));
        auto nf = nil::weight_orbit_normal_form_gamma(G, g);
        Json j{{"family", K.name()}, {"word", word}, {"n", to_json(nf.n)},
               {"representative", "u^" + to_string(nf.n) + " t"}, {"radius", nf.radius}};
        j["conjugator"] = nf.conjugator ? Json(nf.conjugator->str()) : Json(nullptr);
        return j;
    }
    const g6::Family f = K.family == knot::KnotFamily::GPlus ? g6::Family::Plus : g6::Family::Minus;
    auto e = expr::parse_expression(word, expr::Context::G6);
    if (!expr::is_element_expression(e, expr::Context::G6))
        throw std::invalid_argument("'" + word + "' is not a word in x, y, z");
    auto exps = g6::commutator_exponents(expr::eval_g6(e).value);
    if (!exps) throw std::domain_error("element is not in the commutator subgroup");
    auto nf = g6::weight_orbit_normal_form(f, *exps);
    return Json{{"family", K.name()},
                {"word", word},
                {"translation", to_json(*exps)},
                {"n", to_json(nf.n)},
                {"representative", "x^" + to_string(2 * nf.n) + " t"},
                {"conjugator", to_json(nf.conjugator)}};
}

// ---- knot groups ------------------------------------------------------------------

inline Json verdict_json(const knot::VerdictRow& row) {
    Json j{{"group", row.name},
           {"quotient", row.quotientDescription},
           {"finite", row.finite},
           {"directDouble", row.directDouble},
           {"lambdaCyclic", row.lambdaCyclic},
           {"doublySlice", row.verdict.doublySlice},
           {"verdict", row.verdict.doublySlice ? "doubly slice" : "not doubly slice"},
           {"reasonKind", knot::reason_kind_name(row.verdict.kind)},
           {"reasonCode", row.verdict.reasonCode},
           {"reason", row.verdict.reason}};
    if (row.action) j["action"] = to_json(*row.action);
    return j;
}

inline Json doubly_slice(const std::string& descriptor) {
    return verdict_json(knot::verdict_row(knot::parse_descriptor(descriptor)));
}

inline Json verdicts(const std::vector<std::pair<long long, int>>& gammaParams) {
    Json rows = Json::array();
    for (const auto& K : knot::standard_descriptors(gammaParams)) rows.push_back(verdict_json(knot::verdict_row(K)));
    rows.push_back(verdict_json(knot::finite_commutator_row()));
    Json q = Json::array();
    for (auto [e, eta] : knot::q_solver(10)) q.push_back(Json::array({e, eta}));
    return Json{{"verdicts", rows}, {"unitQ", q}};
}

// ---- rendering --------------------------------------------------------------------

inline std::string to_markdown(const Json& j, int depth = 0) {
    std::string out, pad(2 * depth, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            bool nested = (v.is_object() && !v.empty()) || (v.is_array() && !v.empty() && v.front().is_object());
            if (nested) {
                out += pad + "- **" + k + "**:\n" + to_markdown(v, depth + 1);
            } else {
                out += pad + "- **" + k + "**: " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
            }
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad + "- [" + std::to_string(i) + "]\n" + to_markdown(j[i], depth + 1);
        }
    } else {
        out += pad + "- " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
    }
    return out;
}

inline std::string render(const Json& j, report::OutputFormat f) {
    return f == report::OutputFormat::Json ? j.dump(2) + "\n" : to_markdown(j);
}

}  // namespace solvknot::query
