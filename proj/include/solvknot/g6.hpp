#pragma once

// The Hantzsche-Wendt group G6 as the subgroup of Aff(3) generated by
//   x = (e1/2, X),  y = ((e2 - e3)/2, Y),  z = xy = ((e1 - e2 + e3)/2, Z)
// with X, Y, Z the diagonal sign matrices fixing e1, e2, e3 respectively.
// The translation subgroup T is Z^3 = <x^2, y^2, z^2>, so exponent
// coordinates over (x^2, y^2, z^2) coincide with translation coordinates.

#include "solvknot/abelian.hpp"
#include "solvknot/affine.hpp"
#include "solvknot/lattice.hpp"

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace solvknot::g6 {

enum class Holonomy { I = 0, X = 1, Y = 2, Z = 3 };

inline const char* holonomy_name(Holonomy h) {
    static const char* names[] = {"I", "X", "Y", "Z"};
    return names[static_cast<int>(h)];
}

inline RatMatrix diag3(int a, int b, int c) { return RatMatrix::diag({Rational(a), Rational(b), Rational(c)}); }

inline const RatMatrix& holonomy_matrix(Holonomy h) {
    static const std::array<RatMatrix, 4> m{RatMatrix::identity(3), diag3(1, -1, -1), diag3(-1, 1, -1),
                                            diag3(-1, -1, 1)};
    return m[static_cast<int>(h)];
}

// Translation part of the coset representative 1, x, y, z for each holonomy.
inline const RatVec& coset_offset(Holonomy h) {
    static const std::array<RatVec, 4> t{
        RatVec{0, 0, 0},
        RatVec{Rational(1, 2), 0, 0},
        RatVec{0, Rational(1, 2), Rational(-1, 2)},
        RatVec{Rational(1, 2), Rational(-1, 2), Rational(1, 2)},
    };
    return t[static_cast<int>(h)];
}

inline std::optional<Holonomy> holonomy_of(const RatMatrix& A) {
    for (int k = 0; k < 4; ++k)
        if (A == holonomy_matrix(static_cast<Holonomy>(k))) return static_cast<Holonomy>(k);
    return std::nullopt;
}

inline AffineIso coset_rep(Holonomy h) { return {coset_offset(h), holonomy_matrix(h)}; }
inline AffineIso gen_x() { return coset_rep(Holonomy::X); }
inline AffineIso gen_y() { return coset_rep(Holonomy::Y); }
inline AffineIso gen_z() { return coset_rep(Holonomy::Z); }

struct G6Element {
    AffineIso value;
    Holonomy holonomyClass = Holonomy::I;
    IntVec translationResidue;  // value.translation - coset offset, an integer vector

    bool operator==(const G6Element& o) const { return value == o.value; }
    bool operator<(const G6Element& o) const { return value < o.value; }
};

struct Rejection {
    std::string reason;
};

using Membership = std::variant<G6Element, Rejection>;

inline Membership g6_membership(const AffineIso& f) {
    if (f.dim() != 3) return Rejection{"dimension is not 3"};
    auto h = holonomy_of(f.linear());
    if (!h) return Rejection{"linear part is not in the holonomy group {I,X,Y,Z}"};
    auto residue = to_integral(f.translation() - coset_offset(*h));
    if (!residue) return Rejection{"translation is not in the coset offset + Z^3"};
    return G6Element{f, *h, *residue};
}

inline bool is_member(const AffineIso& f) { return std::holds_alternative<G6Element>(g6_membership(f)); }

inline G6Element classify(const AffineIso& f) {
    auto m = g6_membership(f);
    if (auto* r = std::get_if<Rejection>(&m)) throw std::domain_error("not an element of G6: " + r->reason);
    return std::get<G6Element>(m);
}

// A word over x, y, z with integer exponents.
struct G6Word {
    std::vector<std::pair<char, long long>> letters;
};

inline AffineIso generator(char c) {
    switch (c) {
        case 'x': return gen_x();
        case 'y': return gen_y();
        case 'z': return gen_z();
        default: throw std::invalid_argument(std::string("unknown G6 generator '") + c + "'");
    }
}

inline G6Element g6_eval(const G6Word& w) {
    AffineIso acc = AffineIso::identity(3);
    for (const auto& [c, k] : w.letters) acc = acc * generator(c).pow(k);
    return classify(acc);
}

inline AffineIso translation_by(const IntVec& m) { return AffineIso::translation(to_rational(m)); }

struct CheckLine {
    std::string name;
    bool pass;
    std::string detail;
};

inline std::vector<CheckLine> verify_g6_presentation() {
    const AffineIso x = gen_x(), y = gen_y(), z = gen_z();
    std::vector<CheckLine> out;
    auto eq = [&](const std::string& name, const AffineIso& a, const AffineIso& b) {
        out.push_back({name, a == b, a.str()});
    };
    const AffineIso id = AffineIso::identity(3);
    eq("x y^2 x^-1 y^2 = 1", x * y.pow(2) * x.inverse() * y.pow(2), id);
    eq("y x^2 y^-1 x^2 = 1", y * x.pow(2) * y.inverse() * x.pow(2), id);
    eq("z = x y", x * y, z);
    // The alternative generator z' = y x^-1 used in the literature.
    const AffineIso zz = y * x.inverse();
    eq("z' = y^2 z^-1", zz, y.pow(2) * z.inverse());
    eq("z'^2 = z^-2", zz.pow(2), z.pow(-2));
    eq("z' y x = x^2 z'^2", zz * y * x, x.pow(2) * zz.pow(2));
    eq("x^2 z'^2 = z'^2 x^2", x.pow(2) * zz.pow(2), zz.pow(2) * x.pow(2));
    eq("x^2 = e1", x.pow(2), AffineIso::translation({1, 0, 0}));
    eq("y^2 = e2", y.pow(2), AffineIso::translation({0, 1, 0}));
    eq("z^2 = e3", z.pow(2), AffineIso::translation({0, 0, 1}));
    return out;
}

struct SubgroupLattices {
    IntegerLattice T, commutator, twoT;
    Integer indexCommutatorInT, indexTwoTInCommutator;
};

inline IntegerLattice commutator_lattice() {
    return IntegerLattice(3, {IntVec{2, 0, 0}, IntVec{0, 2, 0}, IntVec{1, 1, -1}});
}

inline SubgroupLattices g6_subgroup_lattices() {
    SubgroupLattices s{IntegerLattice::standard(3), commutator_lattice(),
                       IntegerLattice(3, {IntVec{2, 0, 0}, IntVec{0, 2, 0}, IntVec{0, 0, 2}}), 0, 0};
    s.indexCommutatorInT = s.commutator.index_in(s.T);
    s.indexTwoTInCommutator = s.twoT.index_in(s.commutator);
    return s;
}

// Whether an element lies in the commutator subgroup; returns its exponents.
inline std::optional<IntVec> commutator_exponents(const AffineIso& g) {
    if (!g.is_translation()) return std::nullopt;
    auto t = to_integral(g.translation());
    if (!t || !commutator_lattice().contains(*t)) return std::nullopt;
    return t;
}

// H1(G6): generators (x, y); the relators abelianize to 4y = 0 and 4x = 0.
inline const AbelianQuotient& h1_g6() {
    static const AbelianQuotient q = AbelianQuotient::from_relations(IntMatrix{{0, 4}, {4, 0}});
    return q;
}

// Exponent vector over (x, y) of an element: translation residue (m,n,p)
// contributes m x^2 + n y^2 + p z^2 with z = xy, plus the coset representative.
inline IntVec abelianize(const G6Element& g) {
    const IntVec& t = g.translationResidue;
    IntVec e{2 * t[0] + 2 * t[2], 2 * t[1] + 2 * t[2]};
    switch (g.holonomyClass) {
        case Holonomy::I: break;
        case Holonomy::X: e[0] += 1; break;
        case Holonomy::Y: e[1] += 1; break;
        case Holonomy::Z: e[0] += 1; e[1] += 1; break;
    }
    return e;
}
inline IntVec h1_image(const G6Element& g) { return h1_g6().image(abelianize(g)); }

}  // namespace solvknot::g6
