#include "solvknot/expr.hpp"

#include <gtest/gtest.h>

using namespace solvknot;
using namespace solvknot::expr;

namespace {

std::size_t error_position(const std::string& text, Context c) {
    try {
        parse_expression(text, c);
    } catch (const ParseError& e) {
        return e.position;
    }
    ADD_FAILURE() << "expected a parse error for '" << text << "'";
    return std::string::npos;
}

}  // namespace

TEST(Expr, PrintThenParseRoundTrips) {
    for (const char* text : {"x^2y^2z^-2", "j*a", "(ja)^3 d'", "d^4 jb", "", "((x y)^2 z)'"}) {
        auto e = parse_expression(text, Context::G6);
        EXPECT_EQ(parse_expression(print(e), Context::G6), e) << text;
    }
    for (const char* text : {"k[1,0]^2 r", "cu cv' b^3", "u^2 v z^-1"}) {
        auto e = parse_expression(text, Context::Gamma);
        EXPECT_EQ(parse_expression(print(e), Context::Gamma), e) << text;
    }
}

TEST(Expr, ErrorsCarryPositions) {
    EXPECT_EQ(error_position("jq", Context::G6), 1u);
    EXPECT_EQ(error_position("(ja", Context::G6), 0u);
    EXPECT_EQ(error_position("ja)", Context::G6), 2u);
    EXPECT_EQ(error_position("*j", Context::G6), 0u);
    EXPECT_EQ(error_position("j*", Context::G6), 2u);
    EXPECT_EQ(error_position("j^x", Context::G6), 2u);
    EXPECT_EQ(error_position("cx", Context::Gamma), 0u);
    EXPECT_EQ(error_position("k[1]", Context::Gamma), 3u);
}

TEST(Expr, G6EvaluationMatchesWords) {
    EXPECT_EQ(eval_g6("j*a").value, g6::rep("ja"));
    EXPECT_EQ(eval_g6("j a").value, g6::rep("ja"));
    EXPECT_EQ(eval_g6("(ja)^3").value, AffineIso::identity(3));
    EXPECT_EQ(eval_g6("j'").value, g6::rep("j").inverse());
    EXPECT_TRUE(eval_g6("").value.is_identity());
    EXPECT_TRUE(eval_g6("x^2 y").isElement);
    EXPECT_FALSE(eval_g6("x j").isElement);
    EXPECT_EQ(eval_g6("x^2y^2z^-2").value, g6::gen_x().pow(2) * g6::gen_y().pow(2) * g6::gen_z().pow(-2));
}

TEST(Expr, GammaEvaluation) {
    nil::GammaGroup G(2, 1);
    auto k = std::get<nil::GammaAutomorphism>(eval_gamma("k[1,0]", G));
    EXPECT_EQ(k, *nil::k_make(G, 1, 0).aut);
    auto g = std::get<nil::AffNil>(eval_gamma("u^2 v", G));
    EXPECT_EQ(g, G.u().pow(2) * G.v());
    // An element letter mixed into an automorphism word acts by conjugation.
    auto c = std::get<nil::GammaAutomorphism>(eval_gamma("u r", G));
    EXPECT_EQ(c, nil::inner(G, G.u()) * nil::named_auts(G).r);
}

TEST(Expr, UndefinedKIsAnError) {
    nil::GammaGroup G(0, -1);
    EXPECT_THROW(eval_gamma("k[1,0]", G), ParseError);
    EXPECT_NO_THROW(eval_gamma("k[1,-1]", G));
}
