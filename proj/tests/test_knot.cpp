#include "solvknot/knot.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace solvknot;
using namespace solvknot::knot;

namespace {

const std::vector<std::pair<long long, int>> kParams{{-2, 1}, {-2, -1}, {0, 1}, {0, -1}, {2, 1}, {2, -1}};

// A random product of elementary integer matrices: determinant +-1.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    IntMatrix U = IntMatrix::identity(n);
    for (int s = 0; s < 8; ++s) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        long long k = static_cast<long long>(rng() % 5) - 2;
        for (std::size_t c = 0; c < n; ++c) U(i, c) += Integer(k) * U(j, c);
    }
    if (rng() % 2) for (std::size_t c = 0; c < n; ++c) U(0, c) = -U(0, c);
    return U;
}

}  // namespace

TEST(Descriptors, ParseAndName) {
    EXPECT_EQ(parse_descriptor("g+"), KnotGroupDescriptor::g_plus());
    EXPECT_EQ(parse_descriptor("G(-)"), KnotGroupDescriptor::g_minus());
    EXPECT_EQ(parse_descriptor("Fox"), KnotGroupDescriptor::fox());
    EXPECT_EQ(parse_descriptor("pi(0, -1)"), KnotGroupDescriptor::pi(0, -1));
    EXPECT_EQ(parse_descriptor("pi(0,-1)").name(), "pi(0,-1)");
    EXPECT_THROW(parse_descriptor("pi(1,1)"), std::invalid_argument);
    EXPECT_THROW(parse_descriptor("pi(0,1"), std::invalid_argument);
    EXPECT_THROW(parse_descriptor("trefoil"), std::invalid_argument);
}

TEST(CommutatorQuotient, FlatFamilies) {
    for (auto K : {KnotGroupDescriptor::g_plus(), KnotGroupDescriptor::g_minus()}) {
        auto A = commutator_quotient(K);
        ASSERT_TRUE(A.finite.has_value());
        EXPECT_EQ(A.finite->invariantFactors(), (std::vector<Integer>{4, 4}));
        EXPECT_TRUE(is_direct_double(A));
        EXPECT_TRUE(lambda_cyclic(A)) << K.name();
    }
}

TEST(CommutatorQuotient, TrivialActionIsNotCyclic) {
    EXPECT_FALSE(lambda_cyclic(FinAbGroupWithAction({4, 4}, IntMatrix::identity(2))));
}

TEST(CommutatorQuotient, NilFamily) {
    for (auto [e, eta] : kParams) {
        auto K = KnotGroupDescriptor::pi(e, eta);
        auto A = commutator_quotient(K);
        ASSERT_TRUE(A.finite.has_value());
        Integer aq = K.q() < 0 ? Integer(-K.q()) : Integer(K.q());
        EXPECT_EQ(A.finite->invariantFactors(), (std::vector<Integer>{3, 3 * aq}));
        EXPECT_EQ(is_direct_double(A), aq == 1) << K.name();
        EXPECT_TRUE(A.finite->action_minus_one_invertible());
    }
}

TEST(CommutatorQuotient, FoxIsInfinite) {
    auto A = commutator_quotient(KnotGroupDescriptor::fox());
    EXPECT_FALSE(A.finite.has_value());
    EXPECT_THROW(is_direct_double(A), std::domain_error);
    EXPECT_EQ(fox_alexander_polynomial().str("t"), "t-2");
}

TEST(DirectDouble, InvariantUnderChangeOfPresentation) {
    std::mt19937_64 rng(11);
    const std::vector<std::vector<Integer>> groups{{4, 4}, {3, 9}, {3, 3}, {2, 6}, {6, 6}, {3, 15}};
    for (const auto& d : groups) {
        const bool expected = FinAbGroupWithAction(d, IntMatrix::identity(d.size())).is_direct_double();
        for (int t = 0; t < 20; ++t) {
            IntMatrix D(d.size(), d.size());
            for (std::size_t i = 0; i < d.size(); ++i) D(i, i) = d[i];
            IntMatrix R = random_unimodular(rng, d.size()) * D * random_unimodular(rng, d.size());
            // Unit invariant factors are trivial summands and drop out.
            std::vector<Integer> f;
            for (const auto& x : AbelianQuotient::from_relations(R).factors)
                if (x != 1) f.push_back(x);
            EXPECT_EQ(FinAbGroupWithAction(f, IntMatrix::identity(f.size())).is_direct_double(), expected);
        }
    }
}

TEST(Verdicts, ExactlyOneNilGroupIsDoublySlice) {
    int count = 0;
    for (auto [e, eta] : kParams) {
        auto v = doubly_slice_verdict(KnotGroupDescriptor::pi(e, eta));
        if (v.doublySlice) {
            ++count;
            EXPECT_EQ(e, 0);
            EXPECT_EQ(eta, -1);
            EXPECT_EQ(v.kind, ReasonKind::KnownExample);
        } else {
            EXPECT_EQ(v.reasonCode, "not-direct-double");
            EXPECT_EQ(v.kind, ReasonKind::VerifiedObstruction);
        }
    }
    EXPECT_EQ(count, 1);
}

TEST(Verdicts, FlatAndFox) {
    for (auto K : {KnotGroupDescriptor::g_plus(), KnotGroupDescriptor::g_minus()}) {
        auto v = doubly_slice_verdict(K);
        EXPECT_FALSE(v.doublySlice);
        EXPECT_EQ(v.kind, ReasonKind::ExternalArgument);
        EXPECT_EQ(v.reasonCode, "lambda-cyclic-ring-does-not-split");
    }
    auto f = doubly_slice_verdict(KnotGroupDescriptor::fox());
    EXPECT_FALSE(f.doublySlice);
    EXPECT_EQ(f.reasonCode, "alexander-polynomial-irreducible");
}

TEST(QSolver, OnlyZeroMinusOne) {
    EXPECT_EQ(q_solver(10), (std::vector<std::pair<long long, int>>{{0, -1}}));
    EXPECT_EQ(q_solver(100), (std::vector<std::pair<long long, int>>{{0, -1}}));
    EXPECT_TRUE(q_solver(10, 1).empty());
}

TEST(VerdictTable, StandardRows) {
    auto ds = standard_descriptors(kParams);
    EXPECT_EQ(ds.size(), kParams.size() + 3);
    for (const auto& K : ds) {
        auto row = verdict_row(K);
        EXPECT_EQ(row.name, K.name());
        EXPECT_EQ(row.finite, K.family != KnotFamily::Fox);
    }
    EXPECT_EQ(finite_commutator_row().verdict.kind, ReasonKind::ExternalArgument);
}
