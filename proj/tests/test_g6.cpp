#include "solvknot/g6.hpp"

#include <gtest/gtest.h>

using namespace solvknot;
using namespace solvknot::g6;

namespace {

bool all_pass(const std::vector<CheckLine>& lines) {
    for (const auto& l : lines)
        if (!l.pass) return false;
    return !lines.empty();
}

}  // namespace

TEST(G6Presentation, RelatorsEvaluateToTheIdentity) {
    auto lines = verify_g6_presentation();
    for (const auto& l : lines) EXPECT_TRUE(l.pass) << l.name << ": " << l.detail;
    EXPECT_TRUE(all_pass(lines));
}

TEST(G6Presentation, AlternativeGeneratorIdentities) {
    const AffineIso x = gen_x(), y = gen_y(), z = gen_z();
    const AffineIso zz = y * x.inverse();
    EXPECT_EQ(zz, y.pow(2) * z.inverse());
    EXPECT_EQ(zz.pow(2), z.pow(-2));
}

TEST(G6Presentation, HolonomyIsKleinFour) {
    for (auto h : {Holonomy::X, Holonomy::Y, Holonomy::Z}) {
        const RatMatrix& A = holonomy_matrix(h);
        EXPECT_EQ(A * A, RatMatrix::identity(3));
        EXPECT_EQ(det(A), 1);
    }
    EXPECT_EQ(holonomy_matrix(Holonomy::X) * holonomy_matrix(Holonomy::Y), holonomy_matrix(Holonomy::Z));
}

TEST(G6Membership, AcceptsWordsAndRejectsOthers) {
    G6Element g = g6_eval({{{'x', 3}, {'y', -1}, {'z', 2}}});
    EXPECT_TRUE(is_member(g.value));
    EXPECT_EQ(g.holonomyClass, Holonomy::Z);
    EXPECT_FALSE(is_member(AffineIso::translation({ratio(1, 2), 0, 0})));
    EXPECT_FALSE(is_member(AffineIso::linear(-RatMatrix::identity(3))));
    EXPECT_THROW(classify(AffineIso::translation({ratio(1, 3), 0, 0})), std::domain_error);
    EXPECT_THROW(generator('w'), std::invalid_argument);
}

TEST(G6Membership, IsTorsionFree) {
    for (char c : std::string("xyz")) {
        const AffineIso g = generator(c);
        EXPECT_FALSE(affine_order(g).has_value()) << c;
        EXPECT_FALSE(affine_order(g * generator(c == 'z' ? 'x' : 'z')).has_value());
    }
}

TEST(G6Lattices, CommutatorSubgroupHasIndexFourInT) {
    auto L = g6_subgroup_lattices();
    EXPECT_EQ(L.indexCommutatorInT, 4);
    EXPECT_EQ(L.indexTwoTInCommutator, 2);
    // Commutators of generators land in the lattice.
    const AffineIso x = gen_x(), y = gen_y();
    auto c = commutator_exponents(x * y * x.inverse() * y.inverse());
    ASSERT_TRUE(c.has_value());
    EXPECT_TRUE(commutator_lattice().contains(*c));
    EXPECT_FALSE(commutator_exponents(AffineIso::translation({1, 0, 0})).has_value());
}

TEST(G6Abelianization, IsZ4PlusZ4) {
    EXPECT_EQ(h1_g6().factors, (std::vector<Integer>{4, 4}));
    // x^4 and y^4 die; x does not.
    EXPECT_EQ(h1_image(g6_eval({{{'x', 4}}})), (IntVec{0, 0}));
    EXPECT_NE(h1_image(g6_eval({{{'x', 1}}})), (IntVec{0, 0}));
    // Commutators die.
    const AffineIso x = gen_x(), y = gen_y();
    EXPECT_EQ(h1_image(classify(x * y * x.inverse() * y.inverse())), (IntVec{0, 0}));
}
