#include "solvknot/nil.hpp"

#include <gtest/gtest.h>

using namespace solvknot;
using namespace solvknot::nil;

namespace {

const std::vector<std::pair<long long, int>> kParams{{-2, 1}, {-2, -1}, {0, 1}, {0, -1}, {2, 1}, {2, -1}};

}  // namespace

TEST(Nil, GroupLawAndInverse) {
    NilPoint a{1, 2, 3}, b{ratio(1, 2), -1, ratio(2, 3)};
    EXPECT_EQ(a * b, (NilPoint{ratio(3, 2), 1, 3 + ratio(2, 3) + 1 * -1}));
    EXPECT_EQ(a * a.inverse(), NilPoint{});
    EXPECT_EQ(b.inverse() * b, NilPoint{});
    // [u, v] is central of height 1 in these coordinates.
    NilPoint u{1, 0, 0}, v{0, 1, 0};
    EXPECT_TRUE((u * v * u.inverse() * v.inverse()).is_central());
}

TEST(Nil, CompositionOracleOnSeededData) {
    auto o = composition_oracle(20240601, 1000);
    EXPECT_EQ(o.trials, 1000);
    EXPECT_EQ(o.verifiedAgree, 1000);
    EXPECT_EQ(o.homomorphism, 1000);
    // The opposite sign of the correction term is detected.
    EXPECT_LT(o.statedAgree, 1000);
}

TEST(Nil, CompositionOracleIsSeedIndependent) {
    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
        auto o = composition_oracle(seed, 300);
        EXPECT_EQ(o.verifiedAgree, 300) << seed;
        EXPECT_EQ(o.homomorphism, 300) << seed;
    }
}

TEST(Nil, AutomorphismInverse) {
    NilAutomorphism s(RatMatrix{{2, 1}, {1, 1}}, {ratio(1, 3), -2});
    EXPECT_TRUE((s * s.inverse()).is_identity());
    EXPECT_TRUE((s.inverse() * s).is_identity());
    NilPoint p{ratio(1, 2), 3, -1};
    EXPECT_EQ(s.inverse()(s(p)), p);
}

TEST(AffNil, PowersAndInverses) {
    AffNil g({1, ratio(1, 2), 0}, NilAutomorphism(-beta(), {0, ratio(1, 3)}));
    EXPECT_EQ(g.pow(3) * g.pow(-3), AffNil());
    EXPECT_EQ(g.pow(2), g * g);
    EXPECT_EQ(g.inverse() * g, AffNil());
}

TEST(Gamma, RejectsInvalidParameters) {
    EXPECT_THROW(GammaGroup(1, 1), std::invalid_argument);
    EXPECT_THROW(GammaGroup(0, 2), std::invalid_argument);
    EXPECT_NO_THROW(GammaGroup(0, -1));
    EXPECT_EQ(GammaGroup(0, -1).q(), -1);
    EXPECT_EQ(GammaGroup(2, 1).q(), 3);
}

TEST(Gamma, BothPresentationsHold) {
    for (auto [e, eta] : kParams) {
        GammaGroup G(e, eta);
        for (const auto& l : verify_gamma_presentations(G)) EXPECT_TRUE(l.pass) << l.name << " " << l.detail;
        AffNil c = G.v() * G.u() * G.v().inverse() * G.u().inverse();
        EXPECT_EQ(c, AffNil::translation({0, 0, -1})) << G.tag();
    }
}

TEST(Gamma, CentralElementCommutesWithGenerators) {
    for (auto [e, eta] : kParams) {
        GammaGroup G(e, eta);
        const AffNil h = G.z().pow(3 * eta);
        EXPECT_TRUE(h.is_central_translation());
        for (char c : std::string("uvz")) EXPECT_EQ(h * G.generator(c), G.generator(c) * h);
    }
}

TEST(Gamma, UnsignedHeightBreaksTheRelatorsForEtaMinusOne) {
    EXPECT_TRUE(stated_height_relators_hold(0, 1));
    EXPECT_FALSE(stated_height_relators_hold(0, -1));
}

TEST(Gamma, AbelianizationIsZ3PlusZ3q) {
    for (auto [e, eta] : kParams) {
        GammaGroup G(e, eta);
        Integer aq = G.q() < 0 ? Integer(-G.q()) : Integer(G.q());
        EXPECT_EQ(h1_gamma(G).factors, (std::vector<Integer>{3, 3 * aq})) << G.tag();
    }
}

TEST(Gamma, NormalFormRoundTrip) {
    GammaGroup G(2, -1);
    std::vector<std::pair<char, long long>> w{{'u', 2}, {'z', -1}, {'v', 3}, {'z', 2}, {'u', -1}};
    AffNil g = G.eval(w);
    auto nf = G.normal_form(g);
    ASSERT_TRUE(nf.has_value());
    EXPECT_EQ(G.eval(*nf), g);
    EXPECT_FALSE(G.contains(AffNil::translation({ratio(1, 2), 0, 0})));
}

TEST(Gamma, CollectorAgreesWithAffineModel) {
    for (auto [e, eta] : kParams) EXPECT_EQ(collector_agreement(GammaGroup(e, eta), 5, 100), 100);
}

TEST(Wallpaper, OuterAutomorphismsOfP) {
    EXPECT_EQ(out_p().order(), 12u);
    EXPECT_EQ(dihedral_D().size(), 12u);
    EXPECT_TRUE(normalizes_p(AffineIso::linear(-RatMatrix::identity(2))));
    EXPECT_FALSE(normalizes_p(AffineIso::translation({ratio(1, 2), 0})));
}

TEST(Wallpaper, NormalizerTranslationLattice) {
    RatMatrix K = RatMatrix::identity(2) + beta();
    for (const auto& b : normalizer_translations().basis()) EXPECT_TRUE(to_integral(K * b).has_value());
    // The translations normalizing P are exactly (I + beta)^-1 Z^2.
    for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) {
            RatVec v{ratio(i, 3), ratio(j, 3)};
            EXPECT_EQ(normalizes_p(AffineIso::translation(v)), normalizer_translations().contains(v)) << i << "," << j;
        }
    EXPECT_NE(stated_normalizer_translations(), normalizer_translations());
}
