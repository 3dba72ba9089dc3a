// Gamma(e, eta) for the parameters on the command line (default 0 -1):
// abelianization, Out(Gamma), meridianal classes and the knot verdict.

#include "solvknot/solvknot.hpp"

#include <iostream>
#include <string>

using namespace solvknot;

int main(int argc, char** argv) {
    long long e = argc > 1 ? std::stoll(argv[1]) : 0;
    int eta = argc > 2 ? std::stoi(argv[2]) : -1;
    nil::GammaGroup G(e, eta);
    std::cout << G.tag() << ": q = " << G.q() << "\nH1 invariant factors:";
    for (const auto& f : nil::h1_gamma(G).factors) std::cout << ' ' << f;
    std::cout << "\n";

    auto out = nil::out_gamma(G);
    auto classes = nil::meridianal_classes_gamma(out);
    std::cout << "|Out(Gamma)| = " << out.table.order() << ", meridianal classes: " << classes.size() << "\n";

    auto v = knot::doubly_slice_verdict(knot::KnotGroupDescriptor::pi(e, eta));
    std::cout << "pi(" << e << "," << eta << "): " << (v.doublySlice ? "doubly slice" : "not doubly slice") << " ("
              << v.reasonCode << ")\n";
}
