#include "uqb2/repmod.hpp"

#include <gtest/gtest.h>

using namespace uqb2;
using repmod::Family;
using repmod::ModuleParams;
using repmod::Variant;

namespace {

CycNum c(const FieldContext& f, long v) { return CycNum(f, v); }
CycNum q(const FieldContext& f, long long e) { return CycNum::q_pow(f, e); }

ModuleParams params(Family fam, std::vector<CycNum> v, Variant var = Variant::printed) { return {fam, std::move(v), var}; }

}  // namespace

TEST(Matrix, InverseAndRank) {
    const auto& f = FieldContext::get(5);
    Matrix a(f, 2, 2);
    a(0, 0) = q(f, 1);
    a(0, 1) = c(f, 1);
    a(1, 1) = c(f, 2);
    const auto inv = a.inverse();
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(a * *inv, Matrix::identity(f, 2));
    EXPECT_EQ(a.rank(), 2u);
    Matrix s(f, 2, 2);
    s(0, 0) = c(f, 1);
    s(1, 0) = c(f, 3);
    EXPECT_EQ(s.rank(), 1u);
    EXPECT_FALSE(s.inverse().has_value());
}

TEST(Build, V4pE3Action) {
    for (int m : {5, 6, 8}) {
        const auto& f = FieldContext::get(m);
        const CycNum alpha = c(f, 2) * q(f, 1);
        const auto rep = repmod::build(f, params(Family::V4p, {alpha, c(f, 1), c(f, 0)}));
        const Matrix& e3 = rep["e3"];
        for (std::size_t j = 0; j < rep.dim; ++j) EXPECT_TRUE(e3(0, j).is_zero());
        for (std::size_t k = 1; k < rep.dim; ++k)
            for (std::size_t j = 0; j < rep.dim; ++j) {
                const CycNum expect = j + 1 == k ? alpha * q_bracket(f, static_cast<long long>(k), 2) : CycNum(f);
                EXPECT_EQ(e3(k, j), expect) << "m=" << m << " k=" << k << " j=" << j;
            }
    }
}

TEST(Build, Dimensions) {
    const auto& f8 = FieldContext::get(8);
    EXPECT_EQ(repmod::build(f8, params(Family::V3p, {c(f8, 1), c(f8, 1)})).dim, 2u);
    EXPECT_EQ(repmod::build(f8, params(Family::V1p, {c(f8, 1), c(f8, 1), c(f8, 1), c(f8, 0)})).dim, 4u);
    const auto& f12 = FieldContext::get(12);
    EXPECT_EQ(repmod::build(f12, params(Family::V3, {c(f12, 1), c(f12, 1)})).dim, 3u);
    EXPECT_EQ(repmod::build(f12, params(Family::V2p, {c(f12, 1), c(f12, 1), c(f12, 1)})).dim, 6u);
}

TEST(Build, ZIsGammaTimesIdentity) {
    const auto& f = FieldContext::get(5);
    const auto rep = repmod::build(f, params(Family::V1p, {c(f, 1), c(f, 1), c(f, 1), c(f, 0)}));
    EXPECT_EQ(rep["z"], Matrix::identity(f, 5));
    const auto rep3 = repmod::build(f, params(Family::V1p, {c(f, 1), c(f, 1), c(f, 3), c(f, 0)}));
    EXPECT_EQ(rep3["z"], Matrix::scalar(c(f, 3), 5));
}

TEST(Build, RejectsBadParameters) {
    const auto& f = FieldContext::get(5);
    EXPECT_THROW(repmod::build(f, params(Family::V1p, {c(f, 0), c(f, 1), c(f, 1), c(f, 0)})), std::invalid_argument);
    EXPECT_THROW(repmod::build(f, params(Family::V2p, {c(f, 1), c(f, 1)})), std::invalid_argument);
    EXPECT_NO_THROW(repmod::build(f, params(Family::V4p, {c(f, 1), c(f, 0), c(f, 0)})));
    EXPECT_THROW(repmod::parse_family("V9"), std::invalid_argument);
}

TEST(Relations, V4pHolds) {
    for (int m : {5, 6, 7, 8, 12}) {
        const auto& f = FieldContext::get(m);
        EXPECT_TRUE(repmod::verify_relations(repmod::build(f, params(Family::V4p, {c(f, 1), c(f, 1), c(f, 0)}))).all_zero()) << m;
    }
}

TEST(Relations, BFamiliesHold) {
    for (int m : {5, 6, 8, 12}) {
        const auto& f = FieldContext::get(m);
        EXPECT_TRUE(repmod::verify_relations(repmod::build(f, params(Family::V1, {c(f, 1), c(f, 1), c(f, 1), c(f, 0)}))).all_zero());
        EXPECT_TRUE(repmod::verify_relations(repmod::build(f, params(Family::V2, {c(f, 2), q(f, 1), c(f, 1)}))).all_zero());
        EXPECT_TRUE(repmod::verify_relations(repmod::build(f, params(Family::V3, {q(f, 3), c(f, 5)}))).all_zero());
    }
}

TEST(Relations, PrimedFamiliesHold) {
    for (int m : {5, 6, 8, 12}) {
        const auto& f = FieldContext::get(m);
        EXPECT_TRUE(repmod::verify_relations(repmod::build(f, params(Family::V2p, {c(f, 2), q(f, 1), c(f, 1)}))).all_zero()) << m;
        EXPECT_TRUE(repmod::verify_relations(repmod::build(f, params(Family::V3p, {q(f, 3), c(f, 5)}))).all_zero()) << m;
        EXPECT_TRUE(repmod::verify_relations(
                        repmod::build(f, params(Family::V1p, {c(f, 1), c(f, 2), c(f, 1), q(f, 1)}, Variant::corrected)))
                        .all_zero())
            << m;
    }
}

TEST(Relations, PrintedV1pDiagonalFails) {
    // The e2 diagonal term as displayed lacks a q^{2k} factor.
    const auto& f = FieldContext::get(5);
    EXPECT_FALSE(repmod::verify_relations(repmod::build(f, params(Family::V1p, {c(f, 1), c(f, 1), c(f, 1), c(f, 0)}))).all_zero());
}

TEST(Relations, MutatedActionDetected) {
    const auto& f = FieldContext::get(5);
    auto rep = repmod::build(f, params(Family::V1, {c(f, 1), c(f, 1), c(f, 1), c(f, 0)}));
    rep.act.at("e3")(2, 2) += c(f, 1);
    EXPECT_FALSE(repmod::verify_relations(rep).all_zero());
}

TEST(Simple, Certificates) {
    const auto& f5 = FieldContext::get(5);
    const auto v1p = repmod::is_simple(repmod::build(f5, params(Family::V1p, {c(f5, 1), c(f5, 1), c(f5, 1), c(f5, 0)})));
    EXPECT_TRUE(v1p.simple);
    EXPECT_EQ(v1p.certificate, 25u);
    const auto& f8 = FieldContext::get(8);
    const auto v3p = repmod::is_simple(repmod::build(f8, params(Family::V3p, {c(f8, 1), c(f8, 1)})));
    EXPECT_TRUE(v3p.simple);
    EXPECT_EQ(v3p.certificate, 4u);
}

TEST(Simple, DirectSumIsNot) {
    const auto& f = FieldContext::get(5);
    const auto v4 = repmod::build(f, params(Family::V4p, {c(f, 1), c(f, 1), c(f, 0)}));
    const auto sum = repmod::is_simple(repmod::direct_sum(v4, v4));
    EXPECT_FALSE(sum.simple);
    EXPECT_EQ(sum.certificate, 25u);
    EXPECT_TRUE(repmod::is_simple(v4).simple);
}

TEST(Character, V4pAnnihilatedByE3L) {
    const auto& f = FieldContext::get(5);
    const auto ch = repmod::central_character(repmod::build(f, params(Family::V4p, {c(f, 1), c(f, 1), c(f, 0)})));
    EXPECT_TRUE(ch.annihilates.at("e3^l"));
    EXPECT_TRUE(ch.pattern_ok);
    EXPECT_TRUE(ch.all_scalar());
}

TEST(Character, V2pPattern) {
    const auto& f = FieldContext::get(6);
    const auto ch = repmod::central_character(repmod::build(f, params(Family::V2p, {c(f, 2), q(f, 1), c(f, 3)})));
    EXPECT_TRUE(ch.annihilates.at("e1^l"));
    EXPECT_FALSE(ch.annihilates.at("e3^l"));
    EXPECT_TRUE(ch.pattern_ok);
    EXPECT_TRUE(ch.all_scalar());
}

TEST(Character, V1pZIsGamma) {
    const auto& f = FieldContext::get(5);
    const CycNum gamma = c(f, 7) * q(f, 2);
    const auto ch = repmod::central_character(
        repmod::build(f, params(Family::V1p, {c(f, 1), c(f, 2), gamma, c(f, 1)}, Variant::corrected)));
    bool found = false;
    for (const auto& [name, s] : ch.scalars)
        if (name == "z") {
            ASSERT_TRUE(s.has_value());
            EXPECT_EQ(*s, gamma);
            found = true;
        }
    EXPECT_TRUE(found);
    EXPECT_TRUE(ch.all_scalar());
    EXPECT_TRUE(ch.pattern_ok);
}

TEST(E3Action, InvertibleOrNilpotent) {
    for (int m : {5, 8}) {
        const auto& f = FieldContext::get(m);
        const int l = f.l();
        for (const auto& p : {params(Family::V1p, {c(f, 1), c(f, 2), c(f, 1), c(f, 0)}),
                              params(Family::V2p, {c(f, 1), c(f, 2), c(f, 1)}), params(Family::V3p, {c(f, 1), c(f, 2)}),
                              params(Family::V1, {c(f, 1), c(f, 2), c(f, 1), c(f, 0)})})
            EXPECT_TRUE(repmod::build(f, p)["e3"].inverse().has_value());
        const auto v4 = repmod::build(f, params(Family::V4p, {c(f, 1), c(f, 2), c(f, 1)}));
        EXPECT_TRUE(v4["e3"].pow(l).is_zero());
        EXPECT_FALSE(v4["e3"].pow(l - 1).is_zero());
    }
}

TEST(Correspondence, E2RebuiltFromBModule) {
    for (int m : {5, 6, 8}) {
        const auto& f = FieldContext::get(m);
        EXPECT_TRUE(repmod::correspondence_holds(f, params(Family::V2p, {c(f, 2), q(f, 1), c(f, 3)}))) << m;
        EXPECT_TRUE(repmod::correspondence_holds(f, params(Family::V3p, {q(f, 1), c(f, 3)}))) << m;
        EXPECT_TRUE(repmod::correspondence_holds(f, params(Family::V1p, {c(f, 2), q(f, 1), c(f, 3), c(f, 1)}, Variant::corrected)))
            << m;
    }
    const auto& f = FieldContext::get(5);
    EXPECT_THROW(repmod::correspondence_holds(f, params(Family::V4p, {c(f, 1), c(f, 1), c(f, 0)})), std::invalid_argument);
}
