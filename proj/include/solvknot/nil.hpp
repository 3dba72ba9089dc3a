#pragma once

// Exact arithmetic in the Heisenberg group Nil, its automorphisms (A, mu),
// the affine group Aff(Nil) = Nil x| Aut(Nil), and the groups Gamma(e, eta)
// through their faithful embedding in Aff(Nil).
//
// Coordinates are those of upper unitriangular matrices:
//   [x,y,w] = [[1,x,w],[0,1,y],[0,0,1]],  [x,y,w][x',y',w'] = [x+x', y+y', w+w'+xy'].

#include "solvknot/abelian.hpp"
#include "solvknot/affine.hpp"
#include "solvknot/finite_group.hpp"
#include "solvknot/g6.hpp"
#include "solvknot/poly.hpp"
#include "solvknot/subgroup.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace solvknot::nil {

using g6::CheckLine;

struct NilPoint {
    Rational x = 0, y = 0, w = 0;

    NilPoint operator*(const NilPoint& o) const { return {x + o.x, y + o.y, w + o.w + x * o.y}; }
    NilPoint inverse() const { return {-x, -y, -w + x * y}; }
    bool operator==(const NilPoint& o) const { return x == o.x && y == o.y && w == o.w; }
    bool operator!=(const NilPoint& o) const { return !(*this == o); }
    bool operator<(const NilPoint& o) const { return std::tie(x, y, w) < std::tie(o.x, o.y, o.w); }
    bool is_central() const { return x == 0 && y == 0; }
    std::string str() const { return "[" + to_string(x) + "," + to_string(y) + "," + to_string(w) + "]"; }
};

// Which sign the quadratic correction term enters composition with. The
// verified law subtracts it; the other sign is kept only so the report can
// show that it fails the compose-versus-apply oracle.
enum class CompositionSign { Verified, Stated };

// (A, mu) with A = [[a, c], [b, d]] acting on column vectors (x, y), so
// (x, y) goes to (ax + cy, bx + dy), and mu = (mu1, mu2).
class NilAutomorphism {
public:
    NilAutomorphism() : A_(RatMatrix::identity(2)), mu_{0, 0} {}
    NilAutomorphism(RatMatrix A, RatVec mu) : A_(std::move(A)), mu_(std::move(mu)) {
        if (A_.rows() != 2 || A_.cols() != 2 || mu_.size() != 2) throw std::invalid_argument("bad Nil automorphism shape");
        if (det(A_) == 0) throw std::invalid_argument("Nil automorphism needs invertible A");
    }
    static NilAutomorphism identity() { return {}; }

    const RatMatrix& A() const { return A_; }
    const RatVec& mu() const { return mu_; }
    Rational a() const { return A_(0, 0); }
    Rational b() const { return A_(1, 0); }
    Rational c() const { return A_(0, 1); }
    Rational d() const { return A_(1, 1); }

    // The action formula, over any coordinate ring containing the rationals.
    template <class T>
    std::array<T, 3> apply_coords(const T& x, const T& y, const T& w) const {
        const Rational a_ = a(), b_ = b(), c_ = c(), d_ = d();
        T nx = T(a_) * x + T(c_) * y;
        T ny = T(b_) * x + T(d_) * y;
        T nw = T(mu_[0]) * x + T(mu_[1]) * y + T(a_ * d_ - b_ * c_) * w + T(b_ * c_) * x * y +
               T(a_ * b_ / 2) * x * (x - T(1)) + T(c_ * d_ / 2) * y * (y - T(1));
        return {nx, ny, nw};
    }
    NilPoint operator()(const NilPoint& n) const {
        auto r = apply_coords<Rational>(n.x, n.y, n.w);
        return {r[0], r[1], r[2]};
    }

    // The quadratic correction term of composition, written for A with
    // entries (a,b,c,d) and B with entries (g,h,j,k) in the same layout.
    static RatVec composition_correction(const RatMatrix& A, const RatMatrix& B) {
        const Rational a = A(0, 0), b = A(1, 0), c = A(0, 1), d = A(1, 1);
        const Rational g = B(0, 0), h = B(1, 0), j = B(0, 1), k = B(1, 1);
        return {a * b * g * (1 - g) + c * d * h * (1 - h) - 2 * b * c * g * h,
                a * b * j * (1 - j) + c * d * k * (1 - k) - 2 * b * c * j * k};
    }

    NilAutomorphism compose(const NilAutomorphism& o, CompositionSign sign = CompositionSign::Verified) const {
        const RatMatrix& B = o.A_;
        RatVec muB = B.transpose() * mu_;
        RatVec corr = composition_correction(A_, B);
        const Rational half = sign == CompositionSign::Verified ? Rational(-1, 2) : Rational(1, 2);
        RatVec m = muB + scale(det(A_), o.mu_) + scale(half, corr);
        return NilAutomorphism(A_ * B, m);
    }
    NilAutomorphism operator*(const NilAutomorphism& o) const { return compose(o); }

    NilAutomorphism inverse() const {
        RatMatrix Ai = solvknot::inverse(A_);
        // compose(*this, (Ai, nu)) is affine in nu with slope det(A).
        RatVec base = compose(NilAutomorphism(Ai, {0, 0})).mu_;
        return NilAutomorphism(Ai, scale(-1 / det(A_), base));
    }

    bool operator==(const NilAutomorphism& o) const { return A_ == o.A_ && mu_ == o.mu_; }
    bool operator!=(const NilAutomorphism& o) const { return !(*this == o); }
    bool operator<(const NilAutomorphism& o) const { return std::tie(A_, mu_) < std::tie(o.A_, o.mu_); }
    bool is_identity() const { return A_ == RatMatrix::identity(2) && is_zero(mu_); }
    std::string str() const { return "(" + to_string(A_) + ", " + to_string(mu_) + ")"; }

private:
    RatMatrix A_;
    RatVec mu_;
};

inline NilPoint nil_aut_apply(const NilAutomorphism& s, const NilPoint& n) { return s(n); }
inline NilAutomorphism nil_aut_compose(const NilAutomorphism& s, const NilAutomorphism& t) { return s * t; }

// Element (n, sigma) of Aff(Nil), acting by m -> n sigma(m).
class AffNil {
public:
    AffNil() = default;
    AffNil(NilPoint n, NilAutomorphism s) : n_(std::move(n)), s_(std::move(s)) {}
    static AffNil translation(const NilPoint& n) { return {n, NilAutomorphism::identity()}; }

    const NilPoint& point() const { return n_; }
    const NilAutomorphism& aut() const { return s_; }

    AffNil operator*(const AffNil& o) const { return {n_ * s_(o.n_), s_ * o.s_}; }
    AffNil inverse() const {
        NilAutomorphism si = s_.inverse();
        return {si(n_.inverse()), si};
    }
    AffNil pow(long long k) const {
        AffNil base = k < 0 ? inverse() : *this, r;
        unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }
    NilPoint operator()(const NilPoint& m) const { return n_ * s_(m); }

    bool is_identity() const { return n_ == NilPoint{} && s_.is_identity(); }
    bool is_central_translation() const { return s_.is_identity() && n_.is_central(); }
    bool operator==(const AffNil& o) const { return n_ == o.n_ && s_ == o.s_; }
    bool operator!=(const AffNil& o) const { return !(*this == o); }
    bool operator<(const AffNil& o) const { return std::tie(n_, s_) < std::tie(o.n_, o.s_); }
    std::string str() const { return "(" + n_.str() + ", " + s_.str() + ")"; }

    // Image in Aff(2) under Nil -> R^2.
    AffineIso projection() const { return {RatVec{n_.x, n_.y}, s_.A()}; }

private:
    NilPoint n_;
    NilAutomorphism s_;
};

inline RatMatrix beta() { return RatMatrix{{0, 1}, {-1, 1}}; }
inline RatMatrix rho() { return RatMatrix{{0, -1}, {-1, 0}}; }

// ---- Gamma(e, eta) ------------------------------------------------------------

// Normal form z^r u^a v^b h^s with r in {0,1,2} and h = z^{3 eta} central.
struct GammaWord {
    long long r = 0;
    Integer a = 0, b = 0, s = 0;
    bool operator==(const GammaWord& o) const { return r == o.r && a == o.a && b == o.b && s == o.s; }
    std::string str() const {
        return "z^" + std::to_string(r) + " u^" + to_string(a) + " v^" + to_string(b) + " h^" + to_string(s);
    }
};

// Which value to use for the height of the image of z. The verified value is
// -1/(3 eta q); the other is the sign-free value, kept for the report.
enum class ZHeight { Verified, Stated };

class GammaGroup {
public:
    GammaGroup(long long e, int eta, ZHeight height = ZHeight::Verified) : e_(e), eta_(eta) {
        if (e % 2 != 0) throw std::invalid_argument("e must be even");
        if (eta != 1 && eta != -1) throw std::invalid_argument("eta must be +1 or -1");
        q_ = 3 * e - eta - 2;
        if (q_ == 0) throw std::invalid_argument("q = 3e - eta - 2 must be nonzero");
        const Rational w0 = height == ZHeight::Verified ? ratio(-1, 3 * eta * q_) : ratio(-1, 3 * q_);
        alpha_ = NilAutomorphism(-beta(), {0, ratio(eta - 1, q_)});
        u_ = AffNil::translation({1, 0, 0});
        v_ = AffNil::translation({0, 1, 0});
        z_ = AffNil({0, 0, w0}, alpha_);
        h_ = z_.pow(3 * eta_);
        for (long long r = 0; r < 3; ++r) {
            zpow_[r] = z_.pow(r);
            zneg_[r] = z_.pow(-r);
        }
    }

    long long e() const { return e_; }
    int eta() const { return eta_; }
    long long q() const { return q_; }
    const NilAutomorphism& alpha() const { return alpha_; }
    const AffNil& u() const { return u_; }
    const AffNil& v() const { return v_; }
    const AffNil& z() const { return z_; }
    const AffNil& h() const { return h_; }
    std::string tag() const { return "(" + std::to_string(e_) + "," + std::to_string(eta_) + ")"; }
    bool operator==(const GammaGroup& o) const { return e_ == o.e_ && eta_ == o.eta_; }

    const AffNil& generator(char c) const {
        switch (c) {
            case 'u': return u_;
            case 'v': return v_;
            case 'z': return z_;
            default: throw std::invalid_argument(std::string("unknown Gamma generator '") + c + "'");
        }
    }
    AffNil eval(const std::vector<std::pair<char, long long>>& w) const {
        AffNil acc;
        for (const auto& [c, k] : w) acc = acc * generator(c).pow(k);
        return acc;
    }
    AffNil eval(const GammaWord& w) const {
        const AffNil zr = w.r >= 0 && w.r < 3 ? zpow_[w.r] : z_.pow(w.r);
        return zr * u_.pow(to_ll(w.a)) * v_.pow(to_ll(w.b)) * h_.pow(to_ll(w.s));
    }

    // The normal form of an Aff(Nil) element, if it lies in the image of Gamma.
    std::optional<GammaWord> normal_form(const AffNil& g) const {
        for (long long r = 0; r < 3; ++r) {
            AffNil rest = zneg_[r] * g;
            if (!rest.aut().is_identity()) continue;
            const NilPoint& n = rest.point();
            if (!is_integral(n.x) || !is_integral(n.y)) return std::nullopt;
            Integer a = to_integer(n.x), b = to_integer(n.y);
            // n = [a, b, ab - s/q]
            Rational s = (Rational(a * b) - n.w) * q_;
            if (!is_integral(s)) return std::nullopt;
            GammaWord w{r, a, b, to_integer(s)};
            if (eval(w) != g) throw std::logic_error("normal form does not reproduce the element");
            return w;
        }
        return std::nullopt;
    }
    bool contains(const AffNil& g) const { return normal_form(g).has_value(); }

    // Exponent sums over (u, v, z) of the normal form.
    IntVec exponent_sums(const AffNil& g) const {
        auto w = normal_form(g);
        if (!w) throw std::domain_error("element is not in Gamma");
        return {w->a, w->b, Integer(w->r) + Integer(3 * eta_) * w->s};
    }

private:
    long long e_;
    int eta_;
    long long q_;
    NilAutomorphism alpha_;
    AffNil u_, v_, z_, h_;
    std::array<AffNil, 3> zpow_, zneg_;
};

inline GammaGroup gamma_build(long long e, int eta) { return GammaGroup(e, eta); }

// Relators of the second presentation, as Aff(Nil) values that must be 1.
inline std::vector<std::pair<std::string, AffNil>> gamma_relators(const GammaGroup& G, const AffNil& U, const AffNil& V,
                                                                  const AffNil& Z) {
    const int eta = G.eta();
    const long long q = G.q();
    return {
        {"z u z^-1 v^-1", Z * U * Z.inverse() * V.inverse()},
        {"z v z^-1 (v^-1 u^-1 z^(3eta-3))^-1", Z * V * Z.inverse() * (V.inverse() * U.inverse() * Z.pow(3 * eta - 3)).inverse()},
        {"v u v^-1 u^-1 z^(-3 eta q)", V * U * V.inverse() * U.inverse() * Z.pow(-3 * eta * q)},
    };
}

inline std::vector<CheckLine> verify_gamma_presentations(const GammaGroup& G) {
    std::vector<CheckLine> out;
    for (const auto& [name, val] : gamma_relators(G, G.u(), G.v(), G.z()))
        out.push_back({G.tag() + " " + name + " = 1", val.is_identity(), val.str()});
    const AffNil &u = G.u(), &v = G.v(), &z = G.z();
    AffNil comm = v * u * v.inverse() * u.inverse();
    out.push_back({G.tag() + " v u v^-1 u^-1 = ([0,0,-1], iota)", comm == AffNil::translation({0, 0, -1}), comm.str()});
    const AffNil h = G.h();
    // First presentation with u = z^-1 x, v = x z^-1.
    const AffNil x = z * u;
    out.push_back({G.tag() + " v = x z^-1", v == x * z.inverse(), ""});
    const AffNil y = x.inverse() * h.pow(G.e()) * z.inverse();
    out.push_back({G.tag() + " x^3 = h", x.pow(3) == h, x.pow(3).str()});
    out.push_back({G.tag() + " y^3 = h", y.pow(3) == h, y.pow(3).str()});
    out.push_back({G.tag() + " x y z = h^e", x * y * z == h.pow(G.e()), ""});
    bool central = true;
    for (const auto& g : {u, v, z}) central = central && h * g == g * h;
    out.push_back({G.tag() + " z^(3 eta) is central", central, h.str()});
    return out;
}

// The same relators with the unsigned height for z, for the report.
inline bool stated_height_relators_hold(long long e, int eta) {
    GammaGroup G(e, eta, ZHeight::Stated);
    for (const auto& [name, val] : gamma_relators(G, G.u(), G.v(), G.z()))
        if (!val.is_identity()) return false;
    return true;
}

// H1(Gamma) from the abelianized relators over (u, v, z).
inline AbelianQuotient h1_gamma(const GammaGroup& G) {
    const long long eta = G.eta(), q = G.q();
    return AbelianQuotient::from_relations(IntMatrix{{1, -1, 0}, {1, 2, 3 - 3 * eta}, {0, 0, 3 * eta * q}});
}

// ---- collection oracle -----------------------------------------------------------

// Symbolic multiplication of normal forms derived from the relators alone:
// N = <u, v, h> with v u = u v h^q, z x z^-1 = theta(x) on N, z^3 = h^eta.
class GammaCollector {
public:
    explicit GammaCollector(const GammaGroup& G) : q_(G.q()), eta_(G.eta()) {}

    struct N {
        Integer a = 0, b = 0, s = 0;
    };
    N nmul(const N& x, const N& y) const { return {x.a + y.a, x.b + y.b, x.s + y.s + q_ * x.b * y.a}; }
    N npow(const N& x, const Integer& k) const {
        return {k * x.a, k * x.b, k * x.s + q_ * x.b * x.a * (k * (k - 1) / 2)};
    }
    // theta = conjugation by z, and its inverse.
    N theta(const N& x) const {
        const N tu{0, 1, 0}, tv = twisted();
        return nmul(nmul(npow(tu, x.a), npow(tv, x.b)), N{0, 0, x.s});
    }
    N theta_inv(const N& x) const {
        const N tu = twisted(), tv{1, 0, 0};
        return nmul(nmul(npow(tu, x.a), npow(tv, x.b)), N{0, 0, x.s});
    }

    GammaWord mul(const GammaWord& p, const GammaWord& o) const {
        // z^r n z^r' n' = z^(r+r') theta^(-r')(n) n'
        N n{p.a, p.b, p.s};
        for (long long k = 0; k < o.r; ++k) n = theta_inv(n);
        N m = nmul(n, N{o.a, o.b, o.s});
        long long r = p.r + o.r;
        if (r >= 3) {
            r -= 3;
            m.s += eta_;
        }
        return {r, m.a, m.b, m.s};
    }
    GammaWord gen(char c) const {
        switch (c) {
            case 'u': return {0, 1, 0, 0};
            case 'v': return {0, 0, 1, 0};
            case 'z': return {1, 0, 0, 0};
            default: throw std::invalid_argument("unknown generator");
        }
    }
    GammaWord inverse(const GammaWord& w) const {
        // Solve w * x = 1 with x = z^(3-r mod 3) n.
        long long r = (3 - w.r) % 3;
        GammaWord zpart{r, 0, 0, 0};
        GammaWord t = mul(w, zpart);  // = z^{0} n'' h^?
        N n{t.a, t.b, t.s};
        N ni = npow(n, -1);
        GammaWord x{r, ni.a, ni.b, ni.s};
        if (t.r != 0 || !(mul(w, x) == GammaWord{})) throw std::logic_error("collector inverse failed");
        return x;
    }
    GammaWord eval(const std::vector<std::pair<char, long long>>& w) const {
        GammaWord acc;
        for (const auto& [c, k] : w) {
            GammaWord g = k < 0 ? inverse(gen(c)) : gen(c);
            for (long long i = 0; i < (k < 0 ? -k : k); ++i) acc = mul(acc, g);
        }
        return acc;
    }

private:
    // v^-1 u^-1 h^(1-eta)
    N twisted() const { return nmul(nmul(N{0, -1, 0}, N{-1, 0, 0}), N{0, 0, 1 - eta_}); }

    Integer q_;
    int eta_;
};

// ---- seeded oracles ------------------------------------------------------------------

// Counts over random rational data: compose-versus-apply for both signs of
// the correction term, and the homomorphism property of the action formula.
struct CompositionOracle {
    int trials = 0, verifiedAgree = 0, statedAgree = 0, homomorphism = 0;
};

inline CompositionOracle composition_oracle(std::uint64_t seed, int trials = 1000) {
    std::mt19937_64 rng(seed);
    auto rat = [&] {
        long long p = static_cast<long long>(rng() % 11) - 5, q = static_cast<long long>(rng() % 4) + 1;
        return Rational(p, q);
    };
    auto aut = [&] {
        RatMatrix A(2, 2);
        do {
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) A(i, j) = Rational(static_cast<long long>(rng() % 5) - 2);
        } while (det(A) == 0);
        return NilAutomorphism(A, {rat(), rat()});
    };
    CompositionOracle o;
    o.trials = trials;
    for (int t = 0; t < trials; ++t) {
        NilAutomorphism s = aut(), u = aut();
        NilPoint n{rat(), rat(), rat()}, m{rat(), rat(), rat()};
        const NilPoint direct = s(u(n));
        o.verifiedAgree += s.compose(u)(n) == direct;
        o.statedAgree += s.compose(u, CompositionSign::Stated)(n) == direct;
        o.homomorphism += s(n * m) == s(n) * s(m);
    }
    return o;
}

// Agreement of the collector with evaluation in Aff(Nil) on random words.
inline int collector_agreement(const GammaGroup& G, std::uint64_t seed, int trials = 200) {
    std::mt19937_64 rng(seed);
    GammaCollector C(G);
    int agree = 0;
    for (int t = 0; t < trials; ++t) {
        std::vector<std::pair<char, long long>> w;
        for (int k = 0; k < 6; ++k) w.push_back({"uvz"[rng() % 3], static_cast<long long>(rng() % 5) - 2});
        auto nf = G.normal_form(G.eval(w));
        agree += nf && *nf == C.eval(w);
    }
    return agree;
}

// ---- the wallpaper group P = Gamma / centre in Aff(2) --------------------------------

inline AffineIso p_u() { return AffineIso::translation({1, 0}); }
inline AffineIso p_v() { return AffineIso::translation({0, 1}); }
inline AffineIso p_z() { return AffineIso::linear(-beta()); }

inline bool in_rotation_group(const RatMatrix& M) {
    const RatMatrix R = -beta();
    return M == RatMatrix::identity(2) || M == R || M == R * R;
}

inline bool p_member(const AffineIso& f) {
    return f.dim() == 2 && in_rotation_group(f.linear()) && to_integral(f.translation()).has_value();
}

inline const std::vector<RatMatrix>& dihedral_D() {
    static const std::vector<RatMatrix> D = [] {
        std::set<RatMatrix> s{RatMatrix::identity(2)};
        std::vector<RatMatrix> fr{RatMatrix::identity(2)};
        while (!fr.empty()) {
            std::vector<RatMatrix> nx;
            for (const auto& m : fr)
                for (const auto& g : {beta(), rho()})
                    if (s.insert(m * g).second) nx.push_back(m * g);
            fr = std::move(nx);
        }
        return std::vector<RatMatrix>(s.begin(), s.end());
    }();
    return D;
}

// Conjugation test: f P f^-1 = P.
inline bool normalizes_p(const AffineIso& f) {
    if (f.dim() != 2) return false;
    const AffineIso fi = f.inverse();
    for (const auto& g : {p_u(), p_v(), p_z()})
        if (!p_member(f * g * fi) || !p_member(fi * g * f)) return false;
    return true;
}

// Closed-form predicate: linear part in D and (I + beta) v integral.
inline bool normalizer_predicate(const AffineIso& f) {
    if (f.dim() != 2) return false;
    const auto& D = dihedral_D();
    if (std::find(D.begin(), D.end(), f.linear()) == D.end()) return false;
    return to_integral((RatMatrix::identity(2) + beta()) * f.translation()).has_value();
}

inline RatLattice normalizer_translations() {
    RatMatrix K = solvknot::inverse(RatMatrix::identity(2) + beta());
    return RatLattice(2, {K.col(0), K.col(1)});
}
// The lattice (I + beta^-1) Z^2, for comparison in the report.
inline RatLattice stated_normalizer_translations() {
    RatMatrix K = RatMatrix::identity(2) + solvknot::inverse(beta());
    return RatLattice(2, {K.col(0), K.col(1)});
}

inline AffineAmbient p_normalizer_ambient() {
    std::map<RatMatrix, RatVec> off;
    for (const auto& B : dihedral_D()) off[B] = RatVec{0, 0};
    return AffineAmbient{2, off, normalizer_translations()};
}

inline RatVec frac2(const RatVec& v) {
    RatVec w = v;
    for (auto& x : w) x -= Rational(floor(x));
    return w;
}

// Canonical label of the coset P f: least (R A, R v mod Z^2) over R in <-beta>.
inline AffineIso p_out_key(const AffineIso& f) {
    std::optional<AffineIso> best;
    RatMatrix R = RatMatrix::identity(2);
    for (int k = 0; k < 3; ++k) {
        AffineIso c(frac2(R * f.translation()), R * f.linear());
        if (!best || c < *best) best = c;
        R = -beta() * R;
    }
    return *best;
}

inline const FiniteGroupTable<AffineIso>& out_p() {
    static const FiniteGroupTable<AffineIso> t = [] {
        std::vector<AffineIso> keys;
        auto L = normalizer_translations().basis();
        for (const auto& B : dihedral_D())
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    AffineIso f(scale(Rational(i), L[0]) + scale(Rational(j), L[1]), B);
                    if (!normalizes_p(f)) throw std::logic_error("normalizer enumeration produced a non-normalizing map");
                    keys.push_back(p_out_key(f));
                }
        auto mul = [](const AffineIso& a, const AffineIso& b) { return p_out_key(a * b); };
        return FiniteGroupTable<AffineIso>::from_elements(p_out_key(AffineIso::identity(2)), keys, mul);
    }();
    return t;
}

}  // namespace solvknot::nil
