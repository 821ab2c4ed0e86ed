#include "uqb2/torus.hpp"

#include <gtest/gtest.h>

using namespace uqb2;
using torus::E2Image;
using torus::LaurentElement;
using torus::QCommAlgebra;

namespace {

CycNum q(const FieldContext& f, long long e) { return CycNum::q_pow(f, e); }

LaurentElement x(const QCommAlgebra& t, int i, int p = 1) { return LaurentElement::variable(t, i, p); }

}  // namespace

TEST(QuantumTorus, VariableCommutation) {
    const auto& f = FieldContext::get(7);
    const QCommAlgebra t(f, torus::embedding_torus_skew(), true);
    EXPECT_EQ(x(t, 1) * x(t, 0), q(f, 2) * (x(t, 0) * x(t, 1)));
    EXPECT_EQ(x(t, 3) * x(t, 1), q(f, 2) * (x(t, 1) * x(t, 3)));
    EXPECT_EQ(x(t, 2) * x(t, 0), x(t, 0) * x(t, 2));
    EXPECT_EQ(x(t, 0) * x(t, 3), q(f, 2) * (x(t, 3) * x(t, 0)));
}

TEST(QuantumTorus, InversesCancel) {
    const auto& f = FieldContext::get(5);
    const QCommAlgebra t(f, torus::embedding_torus_skew(), true);
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(x(t, i, -1) * x(t, i), LaurentElement::unit(t));
        EXPECT_EQ(x(t, i, 2) * x(t, i, -3), x(t, i, -1));
    }
}

TEST(QuantumTorus, RejectsNonAntisymmetric) {
    const auto& f = FieldContext::get(5);
    EXPECT_THROW(QCommAlgebra(f, {{0, 1}, {1, 0}}, true), std::invalid_argument);
}

TEST(QuantumTorus, AssociativeOnLaurentMonomials) {
    const auto& f = FieldContext::get(8);
    const QCommAlgebra t(f, torus::embedding_torus_skew(), true);
    const LaurentElement a = x(t, 0, 2) * x(t, 3, -1), b = x(t, 1, -2) * x(t, 2), c = x(t, 3, 3) * x(t, 0, -1);
    EXPECT_EQ((a * b) * c, a * (b * c));
}

TEST(Embedding, GeneratorImages) {
    const auto& f = FieldContext::get(5);
    const QCommAlgebra t(f, torus::embedding_torus_skew(), true);
    EXPECT_EQ(torus::embedding_image(t, "e1"), x(t, 0));
    EXPECT_EQ(torus::embedding_image(t, "e3"), x(t, 1));
    EXPECT_EQ(torus::embedding_image(t, "z"), x(t, 2));
    EXPECT_THROW(torus::embedding_image(t, "e4"), std::invalid_argument);
}

TEST(Embedding, E1E3RelationImageVanishes) {
    const auto& f = FieldContext::get(5);
    const QCommAlgebra t(f, torus::embedding_torus_skew(), true);
    const LaurentElement e1 = torus::embedding_image(t, "e1"), e3 = torus::embedding_image(t, "e3");
    EXPECT_TRUE((e1 * e3 - q(f, -2) * (e3 * e1)).is_zero());
}

TEST(Embedding, CorrectedImageSatisfiesAllRelations) {
    for (int m : {5, 6, 7, 8, 12}) {
        const auto& f = FieldContext::get(m);
        const QCommAlgebra t(f, torus::embedding_torus_skew(), true);
        const auto rep = torus::verify_embedding(t, E2Image::corrected);
        for (const auto& [name, r] : rep.residuals) EXPECT_TRUE(r.is_zero()) << name << " m=" << m;
    }
}

TEST(Embedding, PrintedImageSerreResidualsVanish) {
    const auto& f = FieldContext::get(5);
    const QCommAlgebra t(f, torus::embedding_torus_skew(), true);
    const auto rep = torus::verify_embedding(t, E2Image::printed);
    for (const auto& [name, r] : rep.residuals) {
        if (name.find("serre") == std::string::npos) continue;
        EXPECT_TRUE(r.is_zero()) << name;
    }
}

TEST(Embedding, PrintedImageOnlyWorksWhereQ8IsOne) {
    const auto& f8 = FieldContext::get(8);
    const QCommAlgebra t8(f8, torus::embedding_torus_skew(), true);
    EXPECT_TRUE(torus::verify_embedding(t8, E2Image::printed).all_vanish());
    const auto& f5 = FieldContext::get(5);
    const QCommAlgebra t5(f5, torus::embedding_torus_skew(), true);
    EXPECT_FALSE(torus::verify_embedding(t5, E2Image::printed).all_vanish());
}
