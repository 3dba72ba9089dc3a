// A short walk through G6 and its automorphisms: the outer automorphism
// group, the two meridianal classes and a weight orbit normal form.

#include "solvknot/solvknot.hpp"

#include <iostream>

using namespace solvknot;

int main() {
    const auto& out = g6::out_g6();
    std::cout << "|Out(G6)| = " << out.table.order() << ", centre of order " << out.table.center().size() << "\n";
    std::cout << "H1(G6) invariant factors:";
    for (const auto& f : g6::h1_g6().factors) std::cout << ' ' << f;
    std::cout << "\n";

    for (const char* w : {"j", "ja", "jb", "i"}) {
        auto o = g6::element_order(g6::rep(w));
        std::cout << "order(" << w << ") = " << (o ? std::to_string(*o) : "infinite")
                  << (g6::is_meridianal(g6::rep(w)) ? ", meridianal" : "") << "\n";
    }

    auto g = g6::commutator_exponents(g6::gen_x().pow(2) * g6::gen_y().pow(2) * g6::gen_z().pow(-2));
    for (auto f : {g6::Family::Plus, g6::Family::Minus}) {
        auto nf = g6::weight_orbit_normal_form(f, *g);
        std::cout << "in " << g6::family_name(f) << ", x^2 y^2 z^-2 t ~ x^" << 2 * nf.n << " t\n";
    }
}
