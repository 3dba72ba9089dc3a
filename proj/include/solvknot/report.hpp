#pragma once

// The verification run: every check in the library becomes one ClaimRecord
// with a stable id, a status and structured evidence. Records are produced
// in a fixed order, so two runs with the same configuration serialize to the
// same bytes.
//
// Status policy:
//   pass      the statement holds exactly as stated.
//   fail      an exact computation contradicts the statement; the payload
//             carries the counterexample or the corrected value.
//   external  the computable part holds and the remaining step is a cited
//             argument that nothing here evaluates.
//   bounded   a finite search of the given radius found no counterexample.
// When a statement holds only after correcting an evident misprint, the
// record is "pass" for the corrected form and the payload lists the stated
// form under "statedVariants" together with whether it holds.

#include "solvknot/expr.hpp"
#include "solvknot/g6_aut.hpp"
#include "solvknot/gamma_aut.hpp"
#include "solvknot/knot.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace solvknot::report {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, External, Bounded };

inline std::string status_name(Status s, long long radius) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::External: return "external";
        case Status::Bounded: return "bounded(" + std::to_string(radius) + ")";
    }
    return "?";
}

struct ClaimRecord {
    std::string claimId;
    std::string location;  // the statement's subject, e.g. "Out(G6)"
    Status status = Status::Pass;
    long long radius = 0;  // meaningful for Bounded only
    std::string summary;
    Json payload = Json::object();

    std::string status_text() const { return status_name(status, radius); }
};

enum class OutputFormat { Json, Markdown };

struct RunConfig {
    std::vector<std::pair<long long, int>> gammaParams{{-2, 1}, {-2, -1}, {0, 1}, {0, -1}, {2, 1}, {2, -1}};
    long long searchRadius = 6;
    std::uint64_t randomSeed = 20240601;
    OutputFormat outputFormat = OutputFormat::Json;

    // Throws std::invalid_argument on a bad entry.
    void validate() const {
        if (gammaParams.empty()) throw std::invalid_argument("gammaParams must not be empty");
        std::set<std::pair<long long, int>> seen;
        for (auto [e, eta] : gammaParams) {
            nil::GammaGroup check(e, eta);
            if (!seen.insert({e, eta}).second) throw std::invalid_argument("repeated entry in gammaParams");
        }
        if (searchRadius <= 0) throw std::invalid_argument("searchRadius must be positive");
    }
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "(e,eta) (e,eta) ..." with optional commas or semicolons between pairs.
inline std::vector<std::pair<long long, int>> parse_gamma_params(const std::string& text) {
    std::vector<std::pair<long long, int>> out;
    std::size_t p = 0;
    while (true) {
        p = text.find('(', p);
        if (p == std::string::npos) break;
        auto close = text.find(')', p);
        if (close == std::string::npos) throw ConfigError("unterminated pair in gammaParams");
        std::string inner = text.substr(p + 1, close - p - 1);
        auto comma = inner.find(',');
        if (comma == std::string::npos) throw ConfigError("pair without comma in gammaParams: (" + inner + ")");
        try {
            out.push_back({std::stoll(inner.substr(0, comma)), std::stoi(inner.substr(comma + 1))});
        } catch (const std::logic_error&) {
            throw ConfigError("non-integer entry in gammaParams: (" + inner + ")");
        }
        p = close + 1;
    }
    if (out.empty()) throw ConfigError("gammaParams has no (e,eta) pairs");
    return out;
}

inline OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "md" || s == "markdown") return OutputFormat::Markdown;
    throw ConfigError("unknown output format '" + s + "' (expected json or md)");
}

// Flat "key = value" lines; '#' starts a comment. Keys: gammaParams,
// searchRadius, randomSeed, outputFormat.
inline RunConfig parse_config(std::istream& in) {
    RunConfig c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto eq = line.find('=');
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        try {
            if (key == "gammaParams") {
                c.gammaParams = parse_gamma_params(value);
            } else if (key == "searchRadius") {
                c.searchRadius = std::stoll(value);
            } else if (key == "randomSeed") {
                c.randomSeed = std::stoull(value);
            } else if (key == "outputFormat") {
                c.outputFormat = parse_format(value);
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::logic_error&) {
            throw ConfigError("line " + std::to_string(lineno) + ": bad value for " + key);
        }
    }
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return c;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file " + path);
    return parse_config(f);
}

// ---- JSON helpers -------------------------------------------------------------

inline Json to_json(const Integer& z) {
    if (z > Integer(std::numeric_limits<long long>::max()) || z < Integer(std::numeric_limits<long long>::min()))
        return z.str();
    return to_ll(z);
}
inline Json to_json(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(to_json(z));
    return a;
}
inline Json to_json(const IntMatrix& M) {
    Json a = Json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(to_json(M(i, j)));
        a.push_back(row);
    }
    return a;
}
inline Json to_json(const std::vector<g6::CheckLine>& lines) {
    Json a = Json::array();
    for (const auto& l : lines) {
        Json o{{"check", l.name}, {"pass", l.pass}};
        if (!l.pass && !l.detail.empty()) o["value"] = l.detail;
        a.push_back(o);
    }
    return a;
}
inline bool all_pass(const std::vector<g6::CheckLine>& lines) {
    for (const auto& l : lines)
        if (!l.pass) return false;
    return true;
}
inline Json failing(const std::vector<g6::CheckLine>& lines) {
    Json a = Json::array();
    for (const auto& l : lines)
        if (!l.pass) a.push_back(l.name);
    return a;
}
inline Json lattice_json(const RatLattice& L) {
    Json a = Json::array();
    for (const auto& b : L.basis()) a.push_back(to_string(b));
    return a;
}
inline Json variant(const std::string& statement, bool holds) { return Json{{"statement", statement}, {"holds", holds}}; }

// ---- the run -------------------------------------------------------------------

class Report {
public:
    void add(ClaimRecord r) {
        for (const auto& x : records_)
            if (x.claimId == r.claimId) throw std::logic_error("duplicate claim id " + r.claimId);
        records_.push_back(std::move(r));
    }
    void add(std::string id, std::string location, bool ok, std::string summary, Json payload = Json::object()) {
        add({std::move(id), std::move(location), ok ? Status::Pass : Status::Fail, 0, std::move(summary),
             std::move(payload)});
    }
    void add_lines(std::string id, std::string location, std::string summary, const std::vector<g6::CheckLine>& lines,
                   Json extra = Json::object()) {
        Json p = extra;
        p["checks"] = to_json(lines);
        if (!all_pass(lines)) p["failed"] = failing(lines);
        add(std::move(id), std::move(location), all_pass(lines), std::move(summary), p);
    }

    const std::vector<ClaimRecord>& records() const { return records_; }
    const ClaimRecord& at(const std::string& id) const {
        for (const auto& r : records_)
            if (r.claimId == id) return r;
        throw std::out_of_range("no claim " + id);
    }
    bool any_fail() const {
        for (const auto& r : records_)
            if (r.status == Status::Fail) return true;
        return false;
    }
    int exit_code() const { return any_fail() ? 1 : 0; }

    Json counts() const {
        long long p = 0, f = 0, e = 0, b = 0;
        for (const auto& r : records_) switch (r.status) {
                case Status::Pass: ++p; break;
                case Status::Fail: ++f; break;
                case Status::External: ++e; break;
                case Status::Bounded: ++b; break;
            }
        return Json{{"pass", p}, {"fail", f}, {"external", e}, {"bounded", b}, {"total", records_.size()}};
    }

    RunConfig config;

private:
    std::vector<ClaimRecord> records_;
};

inline Json config_json(const RunConfig& c) {
    Json gp = Json::array();
    for (auto [e, eta] : c.gammaParams) gp.push_back(Json::array({e, eta}));
    return Json{{"gammaParams", gp}, {"searchRadius", c.searchRadius}, {"randomSeed", c.randomSeed}};
}

inline std::string to_json_text(const Report& r) {
    Json claims = Json::array();
    for (const auto& c : r.records())
        claims.push_back(Json{{"claimId", c.claimId},
                              {"location", c.location},
                              {"status", c.status_text()},
                              {"summary", c.summary},
                              {"payload", c.payload}});
    Json doc{{"schema", "solvknot-report/1"}, {"config", config_json(r.config)}, {"counts", r.counts()},
             {"claims", claims}};
    return doc.dump(2) + "\n";
}

inline std::string md_escape(std::string s) {
    std::string out;
    for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
    return out;
}

inline std::string to_markdown(const Report& r) {
    std::ostringstream o;
    const Json k = r.counts();
    o << "# solvknot verification report\n\n";
    o << "pass " << k["pass"] << ", fail " << k["fail"] << ", external " << k["external"] << ", bounded "
      << k["bounded"] << " (" << k["total"] << " claims)\n\n";
    o << "| claim | subject | status | summary |\n|---|---|---|---|\n";
    for (const auto& c : r.records())
        o << "| `" << c.claimId << "` | " << md_escape(c.location) << " | " << c.status_text() << " | "
          << md_escape(c.summary) << " |\n";
    return o.str();
}

inline std::string render(const Report& r, OutputFormat f) {
    return f == OutputFormat::Json ? to_json_text(r) : to_markdown(r);
}

// ---- suites ----------------------------------------------------------------------

namespace suites {

using namespace solvknot::g6;

inline void flat_group(Report& R) {
    R.add_lines("g6.presentation", "presentation of G6", "relators evaluate to the identity in Aff(3)",
                verify_g6_presentation());
    auto L = g6_subgroup_lattices();
    R.add("g6.lattices", "T, G6' and 2T", L.indexCommutatorInT == 4 && L.indexTwoTInCommutator == 2,
          "[T : G6'] = " + to_string(L.indexCommutatorInT) + ", [G6' : 2T] = " + to_string(L.indexTwoTInCommutator),
          {{"indexCommutatorInT", to_json(L.indexCommutatorInT)},
           {"indexTwoTInCommutator", to_json(L.indexTwoTInCommutator)}});
    R.add("g6.h1", "H1(G6)", h1_g6().factors == std::vector<Integer>{4, 4}, "H1(G6) = Z/4 + Z/4",
          {{"factors", to_json(h1_g6().factors)}});
}

inline Json subgroup_json(const AffineSubgroup& S) { return S.str(); }

inline void flat_aut(Report& R) {
    R.add_lines("g6-aut.presentation", "presentation of Aut(G6)", "relations among a, ..., j hold in N(G6)",
                verify_aut_presentation());
    R.add_lines("g6-aut.generator-action", "action of a, ..., j on x, y", "images of x and y as tabulated",
                verify_generator_action());

    const auto& out = out_g6();
    const auto& T = out.table;
    const std::size_t nT = normalizer_data().modT.size();
    R.add("g6-out.order", "Out(G6)", T.order() == 96, "|Out(G6)| = " + std::to_string(T.order()),
          {{"value", T.order()}, {"normalizerModT", nT}});
    auto Z = T.center();
    std::vector<std::size_t> expectZ{0, out.label("ab")};
    std::sort(expectZ.begin(), expectZ.end());
    R.add("g6-out.center", "centre of Out(G6)", Z == expectZ, "centre = {1, [ab]}",
          {{"centreOrder", Z.size()}, {"abLabel", out.label("ab")}});
    auto ker = gl2_kernel();
    auto span = T.generated({out.label("a"), out.label("b"), out.label("c"), out.label("e")});
    bool onto = gl2_image_set().size() == 6;
    R.add("g6-out.gl2", "Out(G6) -> GL(2,F2)", onto && ker.size() == 16 && span == ker,
          "onto GL(2,F2), kernel of order 16 generated by [a],[b],[c],[e]",
          {{"imageOrder", gl2_image_set().size()}, {"kernelOrder", ker.size()}, {"kernelIsSpanABCE", span == ker}});
    auto comp = order12_complement();
    R.add("g6-out.non-split", "extension by the image of <d,e,f>", !comp.has_value(),
          "no subgroup of order 12 meets the image of <d,e,f> trivially",
          {{"complementFound", comp.has_value()}});
    R.add_lines("g6-out.relations", "presentation of Out(G6)", "relations hold as identities of outer classes",
                verify_out_relations());

    // Meridianal classes.
    auto groups = meridianal_groups();
    auto classes = meridianal_classes();
    Json gj = Json::array();
    for (const auto& g : groups)
        gj.push_back(Json{{"representative", out.section(g.representative).str()},
                          {"size", g.members.size()},
                          {"orientationPreserving", g.orientationPreserving},
                          {"cubeOrder", g.cubeOrder}});
    const std::size_t ja = out.label("ja"), jb = out.label("jb");
    auto contains = [](const MeridianalClass& c, std::size_t x) {
        return std::find(c.members.begin(), c.members.end(), x) != c.members.end();
    };
    bool reps = classes.size() == 2 && ((contains(classes[0], ja) && contains(classes[1], jb)) ||
                                        (contains(classes[0], jb) && contains(classes[1], ja)));
    R.add("g6-meridianal.classes", "meridianal outer automorphisms of G6", reps,
          "two orientation-preserving classes up to conjugacy and inversion, [ja] and [jb]",
          {{"orientationPreservingClasses", classes.size()},
           {"allMeridianalGroups", gj},
           {"note", "[j] and [j]^-1 form a further meridianal class of orientation-reversing maps"}});
    const AffineIso id = AffineIso::identity(3);
    bool cubes = rep("jajaja") == id && rep("jbjbjb") == rep("de'f") && out.label("jbjbjb") == out.label("ab") &&
                 out.label("ab") != 0;
    R.add("g6-meridianal.cubes", "cubes of ja and jb", cubes, "(ja)^3 = 1, (jb)^3 = de^-1f, [jb]^3 = [ab] != 1");
    const std::size_t li = out.label("i");
    bool viaI = T.mul(T.mul(li, ja), T.inv(li)) == T.inv(ja) && T.mul(T.mul(li, jb), T.inv(li)) == T.inv(jb);
    R.add("g6-meridianal.self-inverse", "conjugacy of [ja], [jb] with their inverses", viaI,
          "[i] conjugates [ja] and [jb] to their inverses");
    for (const auto& [name, ord] : std::vector<std::pair<std::string, long long>>{{"i", 2}, {"j", 6}}) {
        auto o = element_order(rep(name));
        R.add("g6-order." + name, "order of " + name, o && *o == ord,
              name + " has order " + (o ? std::to_string(*o) : "infinity"));
    }

    // Centralizers and normalizers.
    auto cmp = [&](const std::string& id, const std::string& what, const AffineSubgroup& got,
                   const AffineSubgroup& claimed, const std::string& claimedText) {
        R.add(id, what, got == claimed, what + " = " + claimedText,
              {{"computed", subgroup_json(got)}, {"claimed", subgroup_json(claimed)}});
    };
    cmp("g6-centralizer.ja", "C(ja)", centralizer(rep("ja")), generated({"ja", "def'", "abce"}), "<ja, def^-1, abce>");
    cmp("g6-normalizer.ja", "N(<ja>)", normalizer_cyclic(rep("ja")), generated({"ja", "ice", "abce"}),
        "<ja, ice, abce>");
    {
        // The literal reading: elements of determinant +1. The reading that
        // does hold: det(psi) equals the sign with which psi sends ja to ja^{+-1}.
        const AffineIso t = rep("ja");
        auto N0 = normalizer_cyclic(t);
        std::map<RatMatrix, RatVec> compat;
        for (const auto& [B, v] : N0.families()) {
            AffineIso psi(v, B);
            Rational eps = psi * t * psi.inverse() == t ? Rational(1) : Rational(-1);
            if (det(B) == eps) compat[B] = v;
        }
        AffineSubgroup compatible(3, N0.translations(), compat);
        auto claimed = generated({"ja", "ice"});
        auto literal = orientation_preserving_part(N0);
        R.add("g6-normalizer.ja-orientation", "orientation-preserving part of N(<ja>)", literal == claimed,
              "the determinant +1 part of N(<ja>) is <ja, ice>",
              {{"computed", subgroup_json(literal)},
               {"claimed", subgroup_json(claimed)},
               {"iceDeterminant", to_string(det(rep("ice").linear()))},
               {"derived", variant("<ja, ice> = {psi in N(<ja>) : det(psi) = +1 if psi fixes ja, -1 if it inverts ja}",
                                   compatible == claimed)}});
    }
    cmp("g6-centralizer.jb", "C(jb)", centralizer(rep("jb")), generated({"jb"}), "<jb>");
    cmp("g6-normalizer.jb", "N(<jb>)", normalizer_cyclic(rep("jb")), generated({"jb", "i"}), "<jb, i>");
    for (const auto& [t, extra] : std::vector<std::pair<std::string, std::string>>{{"ja", "def'"}, {"jb", "de'f"}}) {
        for (long long n = 1; n <= 3; ++n) {
            const AffineIso phi = named_rep('d').pow(2 * n) * rep(t);
            auto C = centralizer(phi), N = normalizer_cyclic(phi);
            auto claimed = AffineSubgroup::generated_by({phi, rep(extra)}, 3);
            const std::string nm = "d^" + std::to_string(2 * n) + t;
            const std::string ex = extra == "def'" ? "def^-1" : "de^-1f";
            R.add("g6-centralizer." + nm, "C(" + nm + ")", C == claimed && acts_orientably(C),
                  "C(" + nm + ") = <" + nm + ", " + ex + ">, acting orientably",
                  {{"computed", subgroup_json(C)}, {"claimed", subgroup_json(claimed)}, {"orientable", acts_orientably(C)}});
            const AffineIso iab = rep("iab");
            Json inverter = nullptr;
            for (const auto& [B, v] : N.families()) {
                const AffineIso psi(v, B);
                if (psi * phi * psi.inverse() == phi.inverse()) {
                    inverter = psi.str();
                    break;
                }
            }
            R.add("g6-normalizer." + nm, "N(<" + nm + ">)", N == C, "N(<" + nm + ">) = C(" + nm + ")",
                  {{"normalizer", subgroup_json(N)},
                   {"centralizerIndex", N.linear_order() / std::max<std::size_t>(1, C.linear_order())},
                   {"inverter", inverter},
                   {"iabInvertsIt", iab * phi * iab.inverse() == phi.inverse()}});
        }
    }

    // Infinite order of d^{2n} jb.
    {
        bool ok = true;
        Json rows = Json::array();
        for (long long n = 0; n <= 3; ++n) {
            const AffineIso phi = named_rep('d').pow(2 * n) * rep("jb");
            bool cube = phi.pow(3) == rep("de'f").pow(2 * n + 1);
            bool inf = !element_order(phi).has_value();
            ok = ok && cube && inf;
            rows.push_back(Json{{"n", n}, {"cubeIdentity", cube}, {"infiniteOrder", inf}});
        }
        R.add("g6-order.d2n-jb", "order of d^{2n} jb", ok, "(d^{2n}jb)^3 = (de^-1f)^{2n+1}, so d^{2n}jb has infinite order",
              {{"rows", rows}});
    }

    // Weight orbits.
    for (Family f : {Family::Plus, Family::Minus}) {
        const std::string tag = f == Family::Plus ? "plus" : "minus";
        const std::string fam = family_name(f);
        long long tested = 0, statedOk = 0, solvedOk = 0, closedOk = 0, shiftedBlocked = 0;
        for (long long m = -2; m <= 2; ++m)
            for (long long n = -2; n <= 2; ++n)
                for (long long p = -2; p <= 2; ++p) {
                    IntVec g{m, n, p};
                    if (!commutator_lattice().contains(g)) continue;
                    ++tested;
                    auto nf = weight_orbit_normal_form(f, g);
                    statedOk += nf.statedCertificateHolds;
                    solvedOk += orbit_certificate(f, g, nf.conjugator, nf.n);
                    closedOk += orbit_certificate(f, g, closed_form_conjugator(f, g), nf.n);
                    // No translation conjugates g t to x^{2(lambda+k)} t for k != 0.
                    bool blocked = true;
                    const RatMatrix K = RatMatrix::identity(3) - meridian_aut(f).linear();
                    for (long long k : {-2, -1, 1, 2})
                        if (solve_integer(K, to_rational(g) - RatVec{Rational(nf.n + k), 0, 0})) blocked = false;
                    shiftedBlocked += blocked;
                }
        const std::string axis = f == Family::Plus ? "(1,1,-1)" : "(1,-1,1)";
        R.add("g6-orbit." + tag + ".normal-form", "weight orbits of " + fam,
              solvedOk == tested && closedOk == tested && shiftedBlocked == tested,
              "every g t with g in G6' is conjugate by an element of T to x^{2 lambda(g)} t, lambda = dot with " + axis,
              {{"tested", tested},
               {"solvedConjugator", solvedOk},
               {"closedFormConjugator", closedOk},
               {"lambdaUniqueUnderT", shiftedBlocked},
               {"statedVariants",
                Json::array({variant("conjugator w = x^{2n} y^{2p} for g = x^{2m} y^{2n} z^{2p}", statedOk == tested)})},
               {"statedConjugatorHolds", statedOk},
               {"derived", f == Family::Plus ? "w = (p, n, 0) in translation coordinates"
                                             : "w = (-p, n, 0) in translation coordinates"}});

        Json lines = Json::array();
        bool allInv = true;
        for (const auto& w : listed_invariance_generators(f)) {
            auto l = invariance_of(f, w);
            allInv = allInv && l.preservesLambda;
            lines.push_back(Json{{"generator", w},
                                 {"commutesModCommutator", l.commutesModCommutator},
                                 {"axisSign", l.linearSign},
                                 {"preservesLambda", l.preservesLambda}});
        }
        auto S = commuting_mod_commutator(f);
        R.add("g6-orbit." + tag + ".invariance", "automorphisms commuting with the meridian of " + fam + " modulo G6'",
              allInv, "lambda is invariant under the listed generators def^-1, jb, ce",
              {{"listed", lines}, {"commutingSubgroup", subgroup_json(S)}, {"commutingLinearParts", S.linear_order()}});

        Json eq = Json::array();
        bool unique = true;
        for (long long a = -3; a <= 3; ++a)
            for (long long b = a + 1; b <= 3; ++b)
                if (auto psi = orbit_equivalence(f, a, b)) {
                    unique = false;
                    eq.push_back(Json{{"m", a}, {"n", b}, {"conjugator", psi->str()}});
                }
        R.add("g6-orbit." + tag + ".uniqueness", "strict weight orbits of " + fam, unique,
              "x^{2m} t and x^{2n} t lie in the same strict weight orbit only if m = n",
              {{"range", "m, n in -3..3"},
               {"equivalentPairs", eq},
               {"derived", f == Family::Plus
                               ? "the orbit invariant is |lambda|: x^{2n} t and x^{-2n} t are always equivalent"
                               : "the orbit invariant is |2 lambda + 1|: x^{2n} t and x^{-2n-2} t are always "
                                 "equivalent"}});
    }

    auto sym = symmetry_certificates();
    bool fpf = fixed_point_free_on_quotient(rep("jb")), ja_fixed = !fixed_point_free_on_quotient(rep("ja"));
    sym.push_back({"[jb] acts on HW without fixed points", fpf, ""});
    sym.push_back({"[ja] has fixed points on HW", ja_fixed, ""});
    R.add_lines("g6-symmetry.certificates", "symmetries of knots with group G(+) or G(-)",
                "omega, iab, ice, the fixed line of ja and the section gamma", sym);
}

inline void wallpaper(Report& R) {
    using namespace solvknot::nil;
    const auto& O = out_p();
    bool ok = O.order() == 12 && O.order_profile() == profile_s3_x_z2() && dihedral_D().size() == 12;
    R.add("wallpaper.out-p", "Out(P) for the wallpaper group of S(3,3,3)", ok,
          "Out(P) has order 12 with the order profile of S3 x Z/2; the linear parts form a dihedral group of order 12",
          {{"order", O.order()}, {"dihedralOrder", dihedral_D().size()}});
    bool eqLattice = stated_normalizer_translations() == normalizer_translations();
    R.add("wallpaper.normalizer-translations", "translations normalizing P", true,
          "the translations in N(P) form the lattice (I + beta)^-1 Z^2",
          {{"basis", lattice_json(normalizer_translations())},
           {"statedVariants", Json::array({variant("the lattice (I + beta^-1) Z^2", eqLattice)})}});
    R.add("wallpaper.minus-identity", "the map -I on R^2", normalizes_p(AffineIso::linear(-RatMatrix::identity(2))),
          "(0, -I) normalizes P");
}

inline void nil_suite(Report& R, const RunConfig& cfg) {
    using namespace solvknot::nil;
    auto o = composition_oracle(cfg.randomSeed, 1000);
    R.add("nil.composition-law", "composition in Aut(Nil)", o.verifiedAgree == o.trials,
          "compose(s,u) applied to n equals s(u(n)) on seeded random rational data",
          {{"trials", o.trials},
           {"agree", o.verifiedAgree},
           {"correctionSign", "-1/2"},
           {"statedVariants", Json::array({variant("correction term entering with +1/2", o.statedAgree == o.trials)})}});
    R.add("nil.action-automorphism", "the action formula", o.homomorphism == o.trials,
          "s(n m) = s(n) s(m) on seeded random rational data", {{"trials", o.trials}, {"agree", o.homomorphism}});
}

struct GammaContext {
    nil::GammaGroup G;
    nil::OutGammaTable out;
};

inline void gamma_suite(Report& R, const RunConfig& cfg, const GammaContext& ctx) {
    using namespace solvknot::nil;
    const GammaGroup& G = ctx.G;
    const std::string tg = G.tag();
    const std::string at = " " + tg;
    auto subj = [&](const std::string& s) { return s + " for Gamma" + tg; };
    Json base{{"e", G.e()}, {"eta", G.eta()}, {"q", G.q()}};

    {
        Json p = base;
        p["statedVariants"] = Json::array({variant("z at height -1/(3q)", stated_height_relators_hold(G.e(), G.eta()))});
        p["zHeight"] = to_string(G.z().point().w);
        R.add_lines("gamma.presentations" + tg, subj("both presentations in Aff(Nil)"),
                    "relators hold, v u v^-1 u^-1 = ([0,0,-1], iota), z^{3 eta} central", verify_gamma_presentations(G), p);
    }
    {
        auto H = h1_gamma(G);
        Integer aq = G.q() < 0 ? Integer(-G.q()) : Integer(G.q());
        std::vector<Integer> expect{3, 3 * aq};
        Json p = base;
        p["factors"] = to_json(H.factors);
        R.add("gamma.h1" + tg, subj("H1"), H.factors == expect, "H1(Gamma) = Z/3 + Z/3|q|", p);
    }
    {
        int agree = collector_agreement(G, cfg.randomSeed + static_cast<std::uint64_t>(G.e() * 4 + G.eta() + 16), 200);
        R.add("gamma.collector" + tg, subj("normal forms"), agree == 200,
              "symbolic collection agrees with Aff(Nil) on 200 seeded random words", {{"agree", agree}, {"trials", 200}});
    }
    R.add_lines("gamma-aut.named" + tg, subj("the automorphisms b, r, c_u, c_v, c_z"),
                "b^6 = r^2 = (br)^2 = 1, c_z = b^4, k[-2,-1] = c_u, k[1,-1] = c_v", verify_named_auts(G));
    {
        auto F = f_subgroup(G);
        Json p = base;
        p["definedCount"] = F.defined.size();
        long long constraints = 0, closed = 0, displayed = 0;
        for (const auto& k : F.made) {
            constraints += k.satisfiesDisplayedConstraints;
            closed += k.matchesClosedForm;
            displayed += k.matchesDisplayedEtaOneForm;
        }
        p["satisfyDisplayedConstraints"] = constraints;
        p["matchClosedForm"] = closed;
        p["derived"] = "s = (m - 2n) q / 3, t = (m + n) q / 3";
        if (G.eta() == 1)
            p["statedVariants"] = Json::array(
                {variant("s = (m-2n)e, t = -(m+n)e", displayed == static_cast<long long>(F.defined.size())),
                 variant("q = 3e", G.q() == 3 * G.e())});
        R.add_lines("gamma-aut.k-family" + tg, subj("the automorphisms k[m,n]"),
                    G.eta() == 1 ? "k[m,n] exists for all (m,n) in the box" : "k[m,n] exists iff m + n = 0 mod 3",
                    F.lines, p);
    }
    R.add_lines("gamma-aut.presentation" + tg, subj("presentation of Aut(Gamma)"),
                "relations among b, r, c_u, c_v, k hold in Aut(Gamma)", verify_aut_gamma_presentation(G));
    {
        const auto& T = ctx.out.table;
        bool ok = G.eta() == 1 ? (T.order() == 12 && T.order_profile() == profile_s3_x_z2())
                               : (T.order() == 4 && T.order_profile() == profile_klein());
        R.add("gamma-out.order" + tg, subj("Out"), ok,
              G.eta() == 1 ? "|Out| = 12 with the order profile of S3 x Z/2" : "|Out| = 4, a Klein four-group",
              {{"order", T.order()}});
    }
    {
        auto M = meridianal_classes_gamma(ctx.out);
        Json cj = Json::array();
        for (const auto& c : M) {
            Json mem = Json::array();
            for (auto x : c.members) mem.push_back(ctx.out.reps[x].str());
            cj.push_back(Json{{"members", mem}, {"containsR", c.containsR},
                              {"order", ctx.out.table.element_order(c.representative)}});
        }
        const std::size_t rl = ctx.out.label(named_auts(G).r);
        bool rCentral = true;
        for (std::size_t x = 0; x < ctx.out.table.order(); ++x)
            rCentral = rCentral && ctx.out.table.mul(x, rl) == ctx.out.table.mul(rl, x);
        R.add("gamma-meridianal.classes" + tg, subj("meridianal outer classes"), M.size() == 1 && M[0].containsR,
              "exactly one meridianal class up to conjugacy and inversion, containing [r]",
              {{"classes", cj}, {"rIsCentral", rCentral}});
    }
    {
        // Normal form of the weight orbits on a sample of sqrt(Gamma)-elements in Gamma'.
        long long tested = 0, certified = 0;
        const long long rad = cfg.searchRadius;
        for (long long a = -2; a <= 2; ++a)
            for (long long b = -2; b <= 2; ++b) {
                AffNil g = G.u().pow(a) * G.v().pow(b);
                if (!in_commutator_subgroup(G, g)) continue;
                ++tested;
                auto nf = weight_orbit_normal_form_gamma(G, g, rad);
                certified += nf.conjugator.has_value() && nf.n == a - b;
            }
        R.add("gamma-orbit.normal-form" + tg, subj("weight orbits"), tested > 0 && certified == tested,
              "g t with g = u^a v^b in Gamma' is carried to u^{a-b} t modulo the centre",
              {{"tested", tested}, {"certified", certified}, {"derived", "invariant n = a - b"}});
    }
    {
        auto hits = bounded_orbit_equivalences(ctx.out, 2, cfg.searchRadius);
        Json hj = Json::array();
        for (const auto& h : hits) hj.push_back(Json{{"m", h.m}, {"n", h.n}, {"conjugator", h.witness}});
        ClaimRecord rec{"gamma-orbit.uniqueness" + tg, subj("strict weight orbits"),
                        hits.empty() ? Status::Bounded : Status::Fail, cfg.searchRadius,
                        "u^m t and u^n t lie in the same strict weight orbit only if m = n (n in -2..2)",
                        Json{{"equivalentPairs", hj}, {"radius", cfg.searchRadius}}};
        R.add(rec);
    }
    {
        Json rows = Json::array();
        bool anyInverting = false;
        for (long long n : {-2, -1, 1, 2}) {
            auto psi = bounded_inverting_conjugator(ctx.out, n, cfg.searchRadius);
            anyInverting = anyInverting || psi.has_value();
            rows.push_back(Json{{"n", n}, {"inverting", psi ? Json(psi->str()) : Json(nullptr)}});
        }
        R.add({"gamma-orbit.not-self-inverse" + tg, subj("u^n r and its inverse"),
               anyInverting ? Status::Fail : Status::Bounded, cfg.searchRadius,
               "u^n r is not conjugate to its inverse for n != 0", Json{{"rows", rows}}});
    }
    {
        bool commutes = true, cMatch = true, nMatch = true;
        Json rows = Json::array();
        for (long long n : {-2, -1, 1, 2}) {
            auto c = centralizer_claims_gamma(G, n);
            commutes = commutes && c.commutes;
            cMatch = cMatch && c.centralizerMatches;
            nMatch = nMatch && c.normalizerMatches;
            rows.push_back(Json{{"n", n},
                                {"centralizerMatches", c.centralizerMatches},
                                {"normalizerMatches", c.normalizerMatches},
                                {"normalizerEqualsCentralizer", c.normalizerEqualsCentralizer},
                                {"centralizer", c.centralizer.str()}});
        }
        R.add("gamma-centralizer.commutes" + tg, subj("c_{uv^-1} and u^n r"), commutes,
              "c_{uv^-1} commutes with u^n r for n in {-2,-1,1,2}");
        R.add("gamma-centralizer.claim" + tg, subj("C(u^n r) and N(<u^n r>)"), cMatch && nMatch,
              "N(<u^n r>) = C(u^n r) = <u^n r, c_{uv^-1}> for n != 0", Json{{"rows", rows}});
    }
    R.add_lines("gamma-tau2.certificates" + tg, subj("the involution R and b^3"),
                "R^2 = 1, R fixes [s,-s,0], b^3 acts as stated", tau2_certificates(G));
}

inline void knot_suite(Report& R, const RunConfig& cfg) {
    using namespace solvknot::knot;
    auto qs = q_solver(10);
    bool qok = qs == std::vector<std::pair<long long, int>>{{0, -1}};
    R.add("knot.q-solver", "(e, eta) with |q| = 1", qok && q_solver(0) == qs && q_solver(10, 1).empty(),
          "|3e - eta - 2| = 1 with e even only for (0, -1)");
    for (const auto& K : standard_descriptors(cfg.gammaParams)) {
        auto row = verdict_row(K);
        Json p{{"quotient", row.quotientDescription},
               {"factors", to_json(row.factors)},
               {"directDouble", row.directDouble},
               {"lambdaCyclic", row.lambdaCyclic},
               {"doublySlice", row.verdict.doublySlice},
               {"reasonKind", reason_kind_name(row.verdict.kind)},
               {"reasonCode", row.verdict.reasonCode},
               {"reason", row.verdict.reason}};
        if (row.action) p["action"] = to_json(*row.action);
        // The computed part must agree with the verdict's reason.
        bool consistent = true;
        if (K.family == KnotFamily::GPlus || K.family == KnotFamily::GMinus)
            consistent = row.finite && row.factors == std::vector<Integer>{4, 4} && row.directDouble && row.lambdaCyclic;
        if (K.family == KnotFamily::Pi)
            consistent = row.verdict.doublySlice == (K.q() == 1 || K.q() == -1) &&
                         (row.verdict.doublySlice || !row.directDouble);
        Status st = !consistent ? Status::Fail
                    : row.verdict.kind == ReasonKind::VerifiedObstruction ? Status::Pass
                                                                          : Status::External;
        R.add({"knot.verdict." + K.name(), "double null concordance for group " + K.name(), st, 0,
               std::string(row.verdict.doublySlice ? "doubly slice" : "not doubly slice") + " (" +
                   row.verdict.reasonCode + ")",
               p});
    }
    auto fc = finite_commutator_row();
    R.add({"knot.verdict.finite-commutator", "knots with finite commutator subgroup", Status::External, 0,
           "documented row only (" + fc.verdict.reasonCode + ")", Json{{"reason", fc.verdict.reason}}});
}

}  // namespace suites

inline Report verify_all(const RunConfig& cfg) {
    cfg.validate();
    Report R;
    R.config = cfg;
    suites::flat_group(R);
    suites::flat_aut(R);
    suites::wallpaper(R);
    suites::nil_suite(R, cfg);
    for (auto [e, eta] : cfg.gammaParams) {
        nil::GammaGroup G(e, eta);
        suites::GammaContext ctx{G, nil::out_gamma(G)};
        suites::gamma_suite(R, cfg, ctx);
    }
    suites::knot_suite(R, cfg);
    return R;
}

}  // namespace solvknot::report
