#include "solvknot/g6_aut.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace solvknot;
using namespace solvknot::g6;

namespace {

void expect_all_pass(const std::vector<CheckLine>& lines) {
    ASSERT_FALSE(lines.empty());
    for (const auto& l : lines) EXPECT_TRUE(l.pass) << l.name << (l.detail.empty() ? "" : ": " + l.detail);
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST(AutG6, NamedGeneratorsNormalizeG6) {
    for (char c : std::string("abcdefij")) EXPECT_TRUE(normalizes(named_rep(c))) << c;
    EXPECT_FALSE(normalizes(AffineIso::translation({ratio(1, 4), 0, 0})));
}

TEST(AutG6, PresentationRelationsHold) { expect_all_pass(verify_aut_presentation()); }

TEST(AutG6, GeneratorActionMatchesTable) { expect_all_pass(verify_generator_action()); }

TEST(AutG6, WordsAndInverses) {
    EXPECT_EQ(rep("jj'"), AffineIso::identity(3));
    EXPECT_EQ(rep("j'"), rep("j").inverse());
    EXPECT_EQ(rep("jiji"), rep("d"));
    EXPECT_EQ(rep("jjj"), rep("abce"));
    EXPECT_THROW(rep("jq"), std::invalid_argument);
    EXPECT_THROW(word("'j"), std::invalid_argument);
}

TEST(OutG6, HasOrder96AndCentreOfOrderTwo) {
    const auto& out = out_g6();
    EXPECT_EQ(out.table.order(), 96u);
    auto Z = out.table.center();
    ASSERT_EQ(Z.size(), 2u);
    EXPECT_TRUE(contains(Z, out.label("ab")));
    EXPECT_TRUE(contains(Z, out.label("")));
    EXPECT_NE(out.label("ab"), out.label(""));
}

TEST(OutG6, MapsOntoGL2F2WithKernelOfOrder16) {
    EXPECT_EQ(gl2_image_set().size(), 6u);
    EXPECT_EQ(gl2_kernel().size(), 16u);
    const auto& out = out_g6();
    EXPECT_EQ(out.table.generated({out.label("a"), out.label("b"), out.label("c"), out.label("e")}), gl2_kernel());
}

TEST(OutG6, ClassIdentities) {
    const auto& out = out_g6();
    EXPECT_EQ(out.label("d"), out.label("bc"));
    EXPECT_EQ(out.label("f"), out.label("ace"));
}

TEST(OutG6, ExtensionDoesNotSplit) { EXPECT_FALSE(order12_complement().has_value()); }

TEST(OutG6, RelationsHoldModuloInner) { expect_all_pass(verify_out_relations()); }

TEST(Meridianal, CriterionMatchesOrderThreeInGL2) {
    const auto& out = out_g6();
    for (std::size_t x = 0; x < out.table.order(); ++x) {
        const AffineIso& phi = out.section(x);
        EXPECT_EQ(is_meridianal(phi), f2_order(gl2_image(phi)) == 3);
    }
    EXPECT_TRUE(is_meridianal(rep("ja")));
    EXPECT_TRUE(is_meridianal(rep("jb")));
    EXPECT_FALSE(is_meridianal(rep("i")));
}

TEST(Meridianal, TwoOrientationPreservingClasses) {
    const auto& out = out_g6();
    auto classes = meridianal_classes();
    ASSERT_EQ(classes.size(), 2u);
    const std::size_t ja = out.label("ja"), jb = out.label("jb");
    bool jaFirst = contains(classes[0].members, ja);
    EXPECT_TRUE(contains(classes[jaFirst ? 0 : 1].members, ja));
    EXPECT_TRUE(contains(classes[jaFirst ? 1 : 0].members, jb));
    EXPECT_FALSE(contains(classes[jaFirst ? 0 : 1].members, jb));
    // Counting orientation-reversing maps too gives a third class, that of j.
    auto all = meridianal_groups();
    EXPECT_EQ(all.size(), 3u);
}

TEST(Meridianal, Cubes) {
    const auto& out = out_g6();
    EXPECT_EQ(rep("jajaja"), AffineIso::identity(3));
    EXPECT_EQ(rep("jbjbjb"), rep("de'f"));
    EXPECT_EQ(out.label("jbjbjb"), out.label("ab"));
    EXPECT_NE(out.label("ab"), out.label(""));
}

TEST(ElementOrder, OfGeneratorsAndShiftedMeridians) {
    EXPECT_EQ(element_order(rep("j")), 6);
    EXPECT_EQ(element_order(rep("i")), 2);
    EXPECT_EQ(element_order(rep("ja")), 3);
    for (long long n = 0; n <= 3; ++n) {
        const AffineIso phi = named_rep('d').pow(2 * n) * rep("jb");
        EXPECT_EQ(phi.pow(3), rep("de'f").pow(2 * n + 1)) << n;
        EXPECT_FALSE(element_order(phi).has_value()) << n;
    }
}

TEST(Centralizers, OfJaAndJb) {
    EXPECT_EQ(centralizer(rep("ja")), generated({"ja", "def'", "abce"}));
    EXPECT_EQ(normalizer_cyclic(rep("ja")), generated({"ja", "ice", "abce"}));
    EXPECT_EQ(centralizer(rep("jb")), generated({"jb"}));
    EXPECT_EQ(normalizer_cyclic(rep("jb")), generated({"jb", "i"}));
}

TEST(Centralizers, OfShiftedMeridians) {
    const AffineIso iab = rep("iab");
    for (const auto& [t, extra] : std::vector<std::pair<std::string, std::string>>{{"ja", "def'"}, {"jb", "de'f"}})
        for (long long n = 1; n <= 3; ++n) {
            const AffineIso phi = named_rep('d').pow(2 * n) * rep(t);
            auto C = centralizer(phi);
            EXPECT_EQ(C, AffineSubgroup::generated_by({phi, rep(extra)}, 3)) << t << " n=" << n;
            EXPECT_TRUE(acts_orientably(C));
            // Something inverts phi, so the cyclic normalizer is strictly
            // larger; for the ja family that element is iab.
            auto N = normalizer_cyclic(phi);
            EXPECT_NE(N, C);
            EXPECT_EQ(N.linear_order(), 2 * C.linear_order());
            bool inverted = false;
            for (const auto& [B, v] : N.families()) {
                const AffineIso psi(v, B);
                const AffineIso conj = psi * phi * psi.inverse();
                EXPECT_TRUE(conj == phi || conj == phi.inverse());
                inverted = inverted || conj == phi.inverse();
            }
            EXPECT_TRUE(inverted) << t << " n=" << n;
            EXPECT_EQ(iab * phi * iab.inverse() == phi.inverse(), t == "ja") << t << " n=" << n;
        }
}

TEST(Centralizers, DeterminantOfTheNormalizerOfJa) {
    auto N = normalizer_cyclic(rep("ja"));
    EXPECT_EQ(det(rep("ice").linear()), -1);
    EXPECT_NE(orientation_preserving_part(N), generated({"ja", "ice"}));
}

TEST(WeightOrbits, NormalFormOnTheSampleBox) {
    for (Family f : {Family::Plus, Family::Minus})
        for (long long m = -2; m <= 2; ++m)
            for (long long n = -2; n <= 2; ++n)
                for (long long p = -2; p <= 2; ++p) {
                    IntVec g{m, n, p};
                    if (!commutator_lattice().contains(g)) {
                        EXPECT_THROW(weight_orbit_normal_form(f, g), std::domain_error);
                        continue;
                    }
                    auto nf = weight_orbit_normal_form(f, g);
                    EXPECT_EQ(nf.n, dot(lambda_axis(f), g));
                    EXPECT_TRUE(orbit_certificate(f, g, nf.conjugator, nf.n));
                    EXPECT_TRUE(orbit_certificate(f, g, closed_form_conjugator(f, g), nf.n));
                }
}

TEST(WeightOrbits, LambdaOfTheExampleElement) {
    // x^2 y^2 z^-2 is the translation (1, 1, -1).
    auto g = commutator_exponents(gen_x().pow(2) * gen_y().pow(2) * gen_z().pow(-2));
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(*g, (IntVec{1, 1, -1}));
    EXPECT_EQ(weight_orbit_normal_form(Family::Plus, *g).n, 3);
}

TEST(WeightOrbits, SignOfLambdaIsNotAnInvariant) {
    // An automorphism with linear part -I identifies x^{2m} t with x^{2n} t
    // when m = -n in G(+), and when m = -n-1 in G(-).
    EXPECT_EQ(rep("abce").linear(), -RatMatrix::identity(3));
    for (Family f : {Family::Plus, Family::Minus})
        for (long long n = 0; n <= 2; ++n) {
            const long long m = f == Family::Plus ? -n : -n - 1;
            if (m == n) continue;
            auto psi = orbit_equivalence(f, m, n);
            ASSERT_TRUE(psi.has_value()) << family_name(f) << " n=" << n;
            EXPECT_EQ(psi->linear(), -RatMatrix::identity(3));
            AffineIso a = translation_by(IntVec{m, 0, 0}) * meridian_aut(f);
            AffineIso b = translation_by(IntVec{n, 0, 0}) * meridian_aut(f);
            EXPECT_EQ(*psi * a * psi->inverse(), b);
        }
    EXPECT_FALSE(orbit_equivalence(Family::Plus, 1, 2).has_value());
    EXPECT_FALSE(orbit_equivalence(Family::Minus, -1, 1).has_value());
}

TEST(WeightOrbits, ListedCommutingGenerators) {
    auto d = invariance_of(Family::Plus, "def'");
    EXPECT_TRUE(d.commutesModCommutator);
    EXPECT_TRUE(d.preservesLambda);
    for (const std::string w : {"jb", "ce"}) {
        auto l = invariance_of(Family::Plus, w);
        EXPECT_FALSE(l.preservesLambda) << w;
    }
}

TEST(Symmetry, Certificates) { expect_all_pass(symmetry_certificates()); }

TEST(Symmetry, FixedPoints) {
    EXPECT_FALSE(fixed_set(rep("jb")).has_value());
    auto fl = fixed_set(rep("ja"));
    ASSERT_TRUE(fl.has_value());
    EXPECT_EQ(fl->directions.size(), 1u);
    EXPECT_TRUE(fixed_point_free_on_quotient(rep("jb")));
    EXPECT_FALSE(fixed_point_free_on_quotient(rep("ja")));
}
