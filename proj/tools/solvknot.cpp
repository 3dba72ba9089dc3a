// solvknot: run the verification report or query single facts about G6,
// Gamma(e, eta) and the knot groups built from them.
//
// Exit status: 0 when nothing failed, 1 when the report has a failing claim,
// 2 for usage, configuration and input errors, 3 for internal errors.

#include "solvknot/solvknot.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

using solvknot::query::Json;
using solvknot::report::OutputFormat;

struct Options {
    std::string format;  // empty: the default for the command
    std::string config;
    std::string output;
    std::string expr;
    std::string family;
    std::string word;
    std::string descriptor;
    std::optional<long long> e;
    std::optional<int> eta;
    std::string groupConfig;
};

OutputFormat format_or(const Options& o, OutputFormat fallback) {
    return o.format.empty() ? fallback : solvknot::report::parse_format(o.format);
}

void add_format(CLI::App* app, Options& o) {
    app->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "md", "markdown"}));
}

int emit(const Json& j, const Options& o) {
    std::cout << solvknot::query::render(j, format_or(o, OutputFormat::Json));
    return 0;
}

solvknot::nil::GammaGroup gamma_group(const Options& o) {
    if (!o.groupConfig.empty()) {
        std::ifstream f(o.groupConfig);
        if (!f) throw solvknot::report::ConfigError("cannot open group config " + o.groupConfig);
        auto G = solvknot::query::parse_gamma_group_config(f);
        if ((o.e && *o.e != G.e()) || (o.eta && *o.eta != G.eta()))
            throw solvknot::report::ConfigError("--e/--eta disagree with " + o.groupConfig);
        return G;
    }
    if (!o.e || !o.eta) throw solvknot::report::ConfigError("gamma needs --e and --eta (or --config)");
    return solvknot::nil::GammaGroup(*o.e, *o.eta);
}

int run_verify(const Options& o) {
    using namespace solvknot::report;
    RunConfig cfg = o.config.empty() ? RunConfig{} : load_config(o.config);
    cfg.outputFormat = format_or(o, cfg.outputFormat);
    Report R = verify_all(cfg);
    const std::string text = render(R, cfg.outputFormat);
    if (o.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.output);
        if (!f) throw ConfigError("cannot write " + o.output);
        f << text;
    }
    const Json k = R.counts();
    std::cerr << "solvknot verify: " << k["pass"] << " pass, " << k["fail"] << " fail, " << k["external"]
              << " external, " << k["bounded"] << " bounded\n";
    return R.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the algebra of two families of solvable 2-knot groups"};
    app.require_subcommand(1);
    Options o;
    // Action of the chosen leaf command; set by its callback.
    std::function<int()> action;

    auto* verify = app.add_subcommand("verify", "run every check and print the claim report");
    verify->add_option("--config", o.config, "flat key = value file (gammaParams, searchRadius, randomSeed, outputFormat)");
    verify->add_option("-o,--output", o.output, "write the report to a file instead of stdout");
    add_format(verify, o);
    verify->callback([&] { action = [&] { return run_verify(o); }; });

    auto* verdicts = app.add_subcommand("verdicts", "doubly-slice verdicts for the standard knot groups");
    verdicts->add_option("--config", o.config, "take gammaParams from this config file");
    add_format(verdicts, o);
    verdicts->callback([&] {
        action = [&] {
            auto cfg = o.config.empty() ? solvknot::report::RunConfig{} : solvknot::report::load_config(o.config);
            return emit(solvknot::query::verdicts(cfg.gammaParams), o);
        };
    });

    auto* ds = app.add_subcommand("doubly-slice", "verdict for one knot group: g+, g-, pi(e,eta) or fox");
    ds->add_option("descriptor", o.descriptor)->required();
    add_format(ds, o);
    ds->callback([&] { action = [&] { return emit(solvknot::query::doubly_slice(o.descriptor), o); }; });

    auto* orbit = app.add_subcommand("orbit", "weight-orbit normal form of g t for g in the commutator subgroup");
    orbit->add_option("family", o.family, "g+, g- or pi(e,eta)")->required();
    orbit->add_option("word", o.word, "word in x, y, z (flat) or u, v, z (Nil)")->required();
    add_format(orbit, o);
    orbit->callback([&] { action = [&] { return emit(solvknot::query::orbit(o.family, o.word), o); }; });

    // G6 queries, available both as "solvknot g6 <query>" and at top level.
    auto add_g6_queries = [&](CLI::App* parent) {
        auto* ot = parent->add_subcommand("out-table", "multiplication table of Out(G6)");
        add_format(ot, o);
        ot->callback([&] { action = [&] { return emit(solvknot::query::g6_out_table(), o); }; });
        auto* c = parent->add_subcommand("centralizer", "centralizer and cyclic normalizer of an automorphism of G6");
        c->add_option("expr", o.expr, "expression in a-f, i, j (x, y, z act by conjugation)")->required();
        add_format(c, o);
        c->callback([&] { action = [&] { return emit(solvknot::query::g6_centralizer(o.expr), o); }; });
        auto* m = parent->add_subcommand("meridianal", "whether an automorphism of G6 is meridianal, and its class");
        m->add_option("expr", o.expr)->required();
        add_format(m, o);
        m->callback([&] { action = [&] { return emit(solvknot::query::g6_meridianal(o.expr), o); }; });
        auto* ord = parent->add_subcommand("order", "order of an element or automorphism of G6");
        ord->add_option("expr", o.expr)->required();
        add_format(ord, o);
        ord->callback([&] { action = [&] { return emit(solvknot::query::g6_order(o.expr), o); }; });
    };
    auto* g6 = app.add_subcommand("g6", "queries about G6 and Aut(G6)");
    g6->require_subcommand(1);
    add_g6_queries(g6);
    {
        auto* go = g6->add_subcommand("orbit", "weight orbit in G(+) or G(-)");
        go->add_option("family", o.family, "g+ or g-")->required();
        go->add_option("word", o.word)->required();
        add_format(go, o);
        go->callback([&] {
            action = [&] {
                auto K = solvknot::knot::parse_descriptor(o.family);
                if (K.family != solvknot::knot::KnotFamily::GPlus && K.family != solvknot::knot::KnotFamily::GMinus)
                    throw std::invalid_argument("g6 orbit takes g+ or g-");
                return emit(solvknot::query::orbit(o.family, o.word), o);
            };
        });
    }
    add_g6_queries(&app);

    auto* gamma = app.add_subcommand("gamma", "queries about Gamma(e, eta) and its automorphisms");
    gamma->require_subcommand(1);
    gamma->add_option("--e", o.e, "even integer e");
    gamma->add_option("--eta", o.eta, "+1 or -1");
    gamma->add_option("--config", o.groupConfig, "flat key = value file with keys e and eta");
    {
        auto* ot = gamma->add_subcommand("out-table", "multiplication table of Out(Gamma)");
        add_format(ot, o);
        ot->callback([&] { action = [&] { return emit(solvknot::query::gamma_out_table(gamma_group(o)), o); }; });
        auto* c = gamma->add_subcommand("centralizer", "centralizer and cyclic normalizer in Aut(Gamma)");
        c->add_option("expr", o.expr, "expression in b, r, cu, cv, cz, k[m,n] (u, v, z act by conjugation)")->required();
        add_format(c, o);
        c->callback([&] { action = [&] { return emit(solvknot::query::gamma_centralizer(gamma_group(o), o.expr), o); }; });
        auto* m = gamma->add_subcommand("meridianal", "whether an automorphism of Gamma is meridianal");
        m->add_option("expr", o.expr)->required();
        add_format(m, o);
        m->callback([&] { action = [&] { return emit(solvknot::query::gamma_meridianal(gamma_group(o), o.expr), o); }; });
        auto* ord = gamma->add_subcommand("order", "order of an element or automorphism of Gamma");
        ord->add_option("expr", o.expr)->required();
        add_format(ord, o);
        ord->callback([&] { action = [&] { return emit(solvknot::query::gamma_order(gamma_group(o), o.expr), o); }; });
        auto* orb = gamma->add_subcommand("orbit", "weight orbit of g t in pi(e, eta)");
        orb->add_option("word", o.word, "word in u, v, z")->required();
        add_format(orb, o);
        orb->callback([&] {
            action = [&] {
                auto G = gamma_group(o);
                return emit(solvknot::query::orbit("pi(" + std::to_string(G.e()) + "," + std::to_string(G.eta()) + ")",
                                                   o.word),
                            o);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action ? action() : 2;
    } catch (const solvknot::expr::ParseError& e) {
        std::cerr << "solvknot: parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "solvknot: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "solvknot: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "solvknot: internal error: " << e.what() << "\n";
        return 3;
    }
}
