#include "solvknot/abelian.hpp"
#include "solvknot/lattice.hpp"
#include "solvknot/matrix.hpp"
#include "solvknot/poly.hpp"
#include "solvknot/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace solvknot;

TEST(Rational, NormalizesSignAndReducesToLowestTerms) {
    Rational r = ratio(6, -4);
    EXPECT_EQ(num(r), -3);
    EXPECT_EQ(den(r), 2);
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(parse_rational("-3/2"), r);
    EXPECT_THROW(ratio(1, 0), std::domain_error);
}

TEST(Rational, FloorAndModAreEuclidean) {
    EXPECT_EQ(floor(ratio(-7, 2)), -4);
    EXPECT_EQ(floor(ratio(7, 2)), 3);
    EXPECT_EQ(mod(Integer(-7), Integer(3)), 2);
    EXPECT_EQ(gcd(Integer(-12), Integer(18)), 6);
    EXPECT_EQ(lcm(Integer(4), Integer(6)), 12);
}

TEST(Rational, HandlesValuesBeyondMachineWords) {
    Integer big = 1;
    for (int i = 0; i < 10; ++i) big *= Integer(1000000007);
    Rational r = Rational(big) / Rational(big + 1);
    EXPECT_LT(r, 1);
    EXPECT_EQ(r * Rational(big + 1), Rational(big));
}

TEST(Matrix, DeterminantInverseAndRank) {
    RatMatrix A{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    EXPECT_EQ(det(A), 18);
    RatMatrix Ai = inverse(A);
    EXPECT_EQ(A * Ai, RatMatrix::identity(3));
    EXPECT_EQ(Ai * A, RatMatrix::identity(3));
    RatMatrix S{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    EXPECT_EQ(det(S), 0);
    EXPECT_EQ(rank(S), 2u);
    EXPECT_THROW(inverse(S), std::domain_error);
}

TEST(Matrix, KernelAndSolveAreExact) {
    RatMatrix S{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    auto K = kernel(S);
    ASSERT_EQ(K.size(), 1u);
    EXPECT_TRUE(is_zero(S * K[0]));
    auto x = solve(S, RatVec{1, 2, 0});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(S * *x, (RatVec{1, 2, 0}));
    EXPECT_FALSE(solve(S, RatVec{1, 0, 0}).has_value());
}

TEST(Lattice, SmithNormalFormIsADecomposition) {
    IntMatrix M{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto s = smith_normal_form(M);
    EXPECT_EQ(s.invariantFactors, (std::vector<Integer>{2, 6, 12}));
    EXPECT_EQ(s.left * M * s.right, s.diagonal);
    EXPECT_EQ(abs(det(s.left)), 1);
    EXPECT_EQ(abs(det(s.right)), 1);
}

TEST(Lattice, SmithNormalFormOnRandomMatrices) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        IntMatrix M(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) M(i, j) = static_cast<long long>(rng() % 21) - 10;
        auto s = smith_normal_form(M);
        ASSERT_EQ(s.left * M * s.right, s.diagonal);
        for (std::size_t i = 0; i + 1 < s.rank; ++i)
            EXPECT_EQ(s.diagonal(i + 1, i + 1) % s.diagonal(i, i), 0) << "divisibility chain";
    }
}

TEST(Lattice, HermiteBasisIsCanonical) {
    IntegerLattice a(3, {IntVec{2, 0, 0}, IntVec{0, 2, 0}, IntVec{1, 1, -1}});
    IntegerLattice b(3, {IntVec{1, 1, -1}, IntVec{3, 1, -1}, IntVec{1, 3, -1}, IntVec{2, 2, -2}});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.index_in(IntegerLattice::standard(3)), 4);
    EXPECT_TRUE(a.contains(IntVec{0, 0, 2}));
    EXPECT_FALSE(a.contains(IntVec{1, 0, 0}));
}

TEST(Lattice, SumAndIntersection) {
    IntegerLattice a(2, {IntVec{2, 0}, IntVec{0, 3}});
    IntegerLattice b(2, {IntVec{3, 0}, IntVec{0, 2}});
    EXPECT_EQ(a.intersection(b), IntegerLattice(2, {IntVec{6, 0}, IntVec{0, 6}}));
    EXPECT_EQ(a.sum(b), IntegerLattice::standard(2));
}

TEST(Lattice, SolveIntegerFindsAllSolutions) {
    IntMatrix M{{2, 4}, {0, 6}};
    auto sol = solve_integer(M, IntVec{2, 6});
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(M * sol->particular, (IntVec{2, 6}));
    EXPECT_TRUE(sol->kernel.empty());
    EXPECT_FALSE(solve_integer(M, IntVec{1, 0}).has_value());
    // Rational coefficients are cleared before solving.
    RatMatrix R{{ratio(1, 2), 0}, {0, 1}};
    auto rs = solve_integer(R, RatVec{ratio(3, 2), 2});
    ASSERT_TRUE(rs.has_value());
    EXPECT_EQ(rs->particular, (IntVec{3, 2}));
}

TEST(Lattice, RationalLatticeReduction) {
    RatLattice L(2, {RatVec{ratio(1, 2), 0}, RatVec{0, ratio(1, 3)}});
    EXPECT_TRUE(L.contains(RatVec{ratio(3, 2), ratio(2, 3)}));
    EXPECT_FALSE(L.contains(RatVec{ratio(1, 4), 0}));
    EXPECT_EQ(L.reduce(RatVec{ratio(7, 4), ratio(5, 6)}), L.reduce(RatVec{ratio(1, 4), ratio(1, 6)}));
}

TEST(Abelian, QuotientFromRelations) {
    auto Q = AbelianQuotient::from_relations(IntMatrix{{0, 4}, {4, 0}});
    EXPECT_EQ(Q.factors, (std::vector<Integer>{4, 4}));
    EXPECT_EQ(Q.order(), 16);
    auto Z = AbelianQuotient::from_relations(IntMatrix{{2, 0}});
    EXPECT_EQ(Z.factors, (std::vector<Integer>{2, 0}));
    EXPECT_FALSE(Z.finite());
}

TEST(Abelian, DirectDoubleAndCyclicity) {
    FinAbGroupWithAction A({4, 4}, IntMatrix::identity(2));
    EXPECT_TRUE(A.is_direct_double());
    EXPECT_FALSE(A.cyclic_generator().has_value());
    FinAbGroupWithAction swap({4, 4}, IntMatrix{{0, 1}, {1, 0}});
    EXPECT_TRUE(swap.cyclic_generator().has_value());
    EXPECT_FALSE(FinAbGroupWithAction({3, 9}, IntMatrix::identity(2)).is_direct_double());
    // Z/2 + Z/6 = (Z/2)^2 + Z/3: the 3-part is not doubled.
    EXPECT_FALSE(FinAbGroupWithAction({2, 6}, IntMatrix::identity(2)).is_direct_double());
    EXPECT_TRUE(FinAbGroupWithAction({6, 6}, IntMatrix::identity(2)).is_direct_double());
}

TEST(Poly, ArithmeticAndComposition) {
    Poly s = Poly::var();
    Poly p = s * s - Poly(2) * s + Poly(1);
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p(Rational(1)), 0);
    EXPECT_EQ(p.compose(Poly(1) - s), s * s);
    EXPECT_EQ((s - Poly(2)).str("t"), "t-2");
}
