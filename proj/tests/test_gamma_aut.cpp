#include "solvknot/gamma_aut.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace solvknot;
using namespace solvknot::nil;

namespace {

const std::vector<std::pair<long long, int>> kParams{{-2, 1}, {-2, -1}, {0, 1}, {0, -1}, {2, 1}, {2, -1}};

// Out tables are the slow part; build each once.
const OutGammaTable& out_for(long long e, int eta) {
    static std::map<std::pair<long long, int>, OutGammaTable> cache;
    auto it = cache.find({e, eta});
    if (it == cache.end()) it = cache.emplace(std::pair{e, eta}, out_gamma(GammaGroup(e, eta))).first;
    return it->second;
}

void expect_all_pass(const std::vector<CheckLine>& lines) {
    ASSERT_FALSE(lines.empty());
    for (const auto& l : lines) EXPECT_TRUE(l.pass) << l.name << (l.detail.empty() ? "" : ": " + l.detail);
}

}  // namespace

TEST(GammaAut, RejectsImagesThatAreNotAutomorphisms) {
    GammaGroup G(0, 1);
    EXPECT_THROW(GammaAutomorphism(G, {G.u(), G.u(), G.z()}), std::domain_error);
    EXPECT_THROW(GammaAutomorphism(G, {G.v(), G.u(), G.z()}), std::domain_error);
}

TEST(GammaAut, NamedAutomorphismRelations) {
    for (auto [e, eta] : kParams) expect_all_pass(verify_named_auts(GammaGroup(e, eta)));
}

TEST(GammaAut, InnerAutomorphismsAndInverses) {
    GammaGroup G(2, -1);
    auto A = named_auts(G);
    auto id = GammaAutomorphism::identity(G);
    EXPECT_EQ(A.b * A.b.inverse(), id);
    EXPECT_EQ(A.r.inverse(), A.r);
    EXPECT_TRUE(is_inner(A.cu).has_value());
    EXPECT_FALSE(is_inner(A.r).has_value());
    // c_{z^{3 eta}} is trivial: the element is central.
    EXPECT_EQ(inner(G, G.h()), id);
    const AffNil g = G.u().pow(2) * G.z();
    EXPECT_EQ(inner(G, g).apply(G.v()), g * G.v() * g.inverse());
}

TEST(KFamily, IntegralityPattern) {
    for (auto [e, eta] : kParams) {
        GammaGroup G(e, eta);
        for (long long m = -3; m <= 3; ++m)
            for (long long n = -3; n <= 3; ++n) {
                auto k = k_make(G, m, n);
                bool expect = eta == 1 || ((m + n) % 3 + 3) % 3 == 0;
                EXPECT_EQ(k.aut.has_value(), expect) << G.tag() << " k[" << m << "," << n << "] " << k.reason;
                if (k.aut) {
                    EXPECT_TRUE(k.satisfiesDisplayedConstraints);
                    EXPECT_TRUE(k.matchesClosedForm);
                }
            }
    }
}

TEST(KFamily, SpecialMembers) {
    for (auto [e, eta] : kParams) {
        GammaGroup G(e, eta);
        auto A = named_auts(G);
        EXPECT_EQ(*k_make(G, -2, -1).aut, A.cu);
        EXPECT_EQ(*k_make(G, 1, -1).aut, A.cv);
        expect_all_pass(f_subgroup(G).lines);
    }
}

TEST(KFamily, DisplayedEtaOneFormIsOffByASign) {
    GammaGroup G(2, 1);
    auto k = k_make(G, 1, 0);
    ASSERT_TRUE(k.aut.has_value());
    EXPECT_TRUE(k.matchesClosedForm);
    EXPECT_FALSE(k.matchesDisplayedEtaOneForm);
    EXPECT_NE(G.q(), 3 * G.e());
    EXPECT_EQ(G.q(), 3 * G.e() - 3);
}

TEST(AutGammaPresentation, ComputedRelations) {
    for (auto [e, eta] : kParams) {
        GammaGroup G(e, eta);
        auto A = named_auts(G);
        EXPECT_EQ(A.r * A.cu * A.r, A.cv.inverse()) << G.tag();
        EXPECT_EQ(A.r * A.cv * A.r, A.cu.inverse()) << G.tag();
        if (eta == 1) {
            auto k = *k_make(G, 1, 0).aut;
            EXPECT_EQ(A.r * k * A.r, k) << G.tag();
            EXPECT_EQ(A.cu * k, k * A.cu);
            EXPECT_EQ(A.b * k * A.b.inverse(), A.cu * k.pow(2));
        } else {
            EXPECT_EQ(A.b * A.cu * A.b.inverse(), A.cv.inverse());
            EXPECT_EQ(A.b * A.cv * A.b.inverse(), A.cu * A.cv);
        }
    }
}

TEST(OutGamma, OrderAndProfile) {
    for (auto [e, eta] : kParams) {
        const auto& out = out_for(e, eta);
        if (eta == 1) {
            EXPECT_EQ(out.table.order(), 12u);
            EXPECT_EQ(out.table.order_profile(), profile_s3_x_z2());
        } else {
            EXPECT_EQ(out.table.order(), 4u);
            EXPECT_EQ(out.table.order_profile(), profile_klein());
        }
    }
}

TEST(OutGamma, MeridianalClasses) {
    for (auto [e, eta] : kParams) {
        const auto& out = out_for(e, eta);
        auto M = meridianal_classes_gamma(out);
        std::size_t withR = 0;
        for (const auto& c : M) withR += c.containsR;
        EXPECT_EQ(withR, 1u);
        // For eta = -1 the class of r is the only one; for eta = +1 a second
        // meridianal class appears.
        EXPECT_EQ(M.size(), eta == 1 ? 2u : 1u) << GammaGroup(e, eta).tag();
        EXPECT_TRUE(is_meridianal_gamma(named_auts(out.G).r));
    }
}

TEST(WeightOrbitsGamma, NormalForm) {
    for (auto [e, eta] : kParams) {
        GammaGroup G(e, eta);
        for (long long a = -2; a <= 2; ++a)
            for (long long b = -2; b <= 2; ++b) {
                AffNil g = G.u().pow(a) * G.v().pow(b);
                if (!in_commutator_subgroup(G, g)) {
                    EXPECT_THROW(weight_orbit_normal_form_gamma(G, g), std::domain_error);
                    continue;
                }
                auto nf = weight_orbit_normal_form_gamma(G, g, 6);
                EXPECT_EQ(nf.n, a - b);
                EXPECT_TRUE(nf.conjugator.has_value()) << G.tag() << " " << a << "," << b;
            }
    }
}

TEST(WeightOrbitsGamma, ShiftedMeridiansCommuteWithCuvInverse) {
    for (auto [e, eta] : kParams) {
        GammaGroup G(e, eta);
        const auto cuv = inner(G, G.u() * G.v().inverse());
        for (long long n = -2; n <= 2; ++n) {
            auto phi = shifted_meridian(G, n);
            EXPECT_EQ(cuv * phi, phi * cuv);
        }
    }
}

TEST(WeightOrbitsGamma, BCubedIdentifiesOppositeShifts) {
    // b^3 acts on P as -I and commutes with r, so it conjugates u^n r to u^-n r.
    for (auto [e, eta] : kParams) {
        GammaGroup G(e, eta);
        auto A = named_auts(G);
        auto b3 = A.b.pow(3);
        EXPECT_EQ(b3.p_image().linear(), -RatMatrix::identity(2));
        EXPECT_EQ(b3 * A.r, A.r * b3);
        for (long long n = 1; n <= 2; ++n) {
            auto lhs = b3 * shifted_meridian(G, n) * b3.inverse();
            auto rhs = shifted_meridian(G, -n);
            // Equal up to an inner automorphism by an element commuting past r.
            EXPECT_EQ(lhs.p_image().linear(), rhs.p_image().linear());
        }
        auto hits = bounded_orbit_equivalences(out_for(e, eta), 2, 2);
        bool sawOpposite = false;
        for (const auto& h : hits) sawOpposite = sawOpposite || h.m == -h.n;
        EXPECT_TRUE(sawOpposite) << G.tag();
    }
}

TEST(WeightOrbitsGamma, ShiftedMeridianIsConjugateToItsInverse) {
    for (auto [e, eta] : kParams) {
        const auto& out = out_for(e, eta);
        for (long long n : {-1, 1}) {
            auto psi = bounded_inverting_conjugator(out, n, 2);
            ASSERT_TRUE(psi.has_value()) << out.G.tag() << " n=" << n;
            auto phi = shifted_meridian(out.G, n);
            EXPECT_EQ(*psi * phi * psi->inverse(), phi.inverse());
        }
    }
}

TEST(CentralizersGamma, NormalizerIsLargerThanCentralizer) {
    for (auto [e, eta] : kParams) {
        GammaGroup G(e, eta);
        auto c = centralizer_claims_gamma(G, 1);
        EXPECT_TRUE(c.commutes);
        EXPECT_FALSE(c.normalizerEqualsCentralizer) << G.tag();
        if (eta == -1) EXPECT_TRUE(c.centralizerMatches) << G.tag();
    }
}

TEST(Tau2, InvolutionAndBCubed) {
    for (auto [e, eta] : kParams) {
        GammaGroup G(e, eta);
        const AffNil R = involution_R();
        EXPECT_TRUE((R * R).is_identity());
        // In exponential coordinates R fixes [s, -s, 0].
        for (int s = -3; s <= 3; ++s) {
            NilPoint p{ratio(s, 2), ratio(-s, 2), 0};
            EXPECT_EQ(to_exponential(R.aut()(from_exponential(p))), p);
        }
        // In the group coordinates it does not, once s != 0.
        EXPECT_NE(R.aut()(NilPoint{1, -1, 0}), (NilPoint{1, -1, 0}));
        const auto L = named_auts(G).b.pow(3).lift();
        const Rational m = -Rational(eta) * Rational(e * eta - 1) / Rational(G.q());
        EXPECT_EQ(L.aut(), NilAutomorphism(-RatMatrix::identity(2), {m, m})) << G.tag();
    }
}
