#include "uqb2/expr.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace uqb2;

namespace {

const FieldContext& f5() { return FieldContext::get(5); }
PbwElement ev(const std::string& s, int m = 5) { return expr::eval(FieldContext::get(m), s); }

std::size_t parse_error_at(const std::string& s) {
    try {
        expr::parse(s);
    } catch (const expr::ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for " << s;
    return 0;
}

}  // namespace

TEST(Expr, CommutatorGivesE3) { EXPECT_EQ(ev("e1*e2 - q^2*e2*e1"), pbw::gen(f5(), Gen::e3)); }

TEST(Expr, UnitAndScalars) {
    EXPECT_EQ(ev("1"), pbw::unit(f5()));
    EXPECT_EQ(ev("q^-2").scalar_value(), CycNum::q_pow(f5(), -2));
    EXPECT_EQ(ev("q^(-2)"), ev("q^-2"));
    EXPECT_EQ(ev("1/3").scalar_value(), CycNum(f5(), mpq_class(1, 3)));
    EXPECT_EQ(expr::eval_scalar(f5(), "2*q - 1/2"), CycNum(f5(), 2L) * CycNum::q_pow(f5(), 1) - CycNum(f5(), mpq_class(1, 2)));
}

TEST(Expr, E2SquaredE1Expansion) {
    // e2^2 e1 = q^-4 e1 e2^2 - c e3 e2 - q^-2 z with c = q^-2 (q^4 - q^-4)/(q^2 - q^-2).
    EXPECT_EQ(ev("e2^2*e1"), ev("q^-4 e1 e2^2 - q^-2 (q^2 + q^-2) e3 e2 - q^-2 z"));
}

TEST(Expr, PrecedenceAndJuxtaposition) {
    EXPECT_EQ(ev("e1 e2"), ev("e1*e2"));
    EXPECT_EQ(ev("2 e1^2"), ev("2*(e1*e1)"));
    EXPECT_EQ(ev("e1 + e2 e3"), ev("e1 + (e2*e3)"));
    EXPECT_EQ(ev("-e1 + e1"), PbwElement(f5()));
    EXPECT_EQ(ev("e1 - e2 - e3"), ev("(e1 - e2) - e3"));
}

TEST(Expr, NamedIdentifiers) {
    EXPECT_EQ(ev("zt"), structure::named(f5(), structure::Named::z_tilde));
    EXPECT_EQ(ev("z1"), structure::named(f5(), structure::Named::z_one));
    EXPECT_EQ(ev("zp"), structure::named(f5(), structure::Named::z_prime));
}

TEST(Expr, SyntaxErrorsCarryPosition) {
    EXPECT_EQ(parse_error_at(""), 0u);
    EXPECT_EQ(parse_error_at("e1 +"), 4u);
    EXPECT_EQ(parse_error_at("(e1 + e2"), 8u);
    EXPECT_EQ(parse_error_at("e1 $ e2"), 3u);
    EXPECT_EQ(parse_error_at("e1^x"), 3u);
}

TEST(Expr, EvaluationErrors) {
    EXPECT_THROW(ev("foo"), expr::EvalError);
    EXPECT_THROW(ev("e1 / e2"), expr::EvalError);
    EXPECT_THROW(ev("e1 / 0"), expr::EvalError);
    EXPECT_THROW(ev("e1^-1"), expr::EvalError);
    EXPECT_THROW(expr::eval_scalar(f5(), "e1"), expr::EvalError);
}

TEST(Expr, PrintParseRoundTrip) {
    for (int m : {5, 6, 8}) {
        const auto& f = FieldContext::get(m);
        std::mt19937 rng(m);
        std::uniform_int_distribution<int> e(0, 2), c(-4, 4), d(1, 3), p(0, m - 1);
        for (int t = 0; t < 20; ++t) {
            PbwElement a(f);
            for (int s = 0; s < 3; ++s)
                a.add_term({e(rng), e(rng), e(rng), e(rng)},
                           CycNum(f, mpq_class(c(rng), d(rng))) * CycNum::q_pow(f, p(rng)) + CycNum::q_pow(f, p(rng)));
            EXPECT_EQ(expr::eval(f, expr::to_expr(a)), a) << expr::to_expr(a);
        }
        EXPECT_EQ(expr::to_expr(PbwElement(f)), "0");
        EXPECT_EQ(expr::eval(f, expr::to_expr(pbw::unit(f))), pbw::unit(f));
    }
}

TEST(Expr, MonomialText) {
    EXPECT_EQ(expr::monomial_to_expr({1, 2, 0, 1}), "z*e3^2*e2");
    EXPECT_EQ(expr::monomial_to_expr({}), "1");
}
