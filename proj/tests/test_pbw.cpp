#include "uqb2/pbw.hpp"
#include "uqb2/torus.hpp"
#include "uqb2/word_rewrite.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace uqb2;

namespace {

struct Fixture {
    const FieldContext& f;
    PbwElement e1, e2, e3, z;
    explicit Fixture(int m)
        : f(FieldContext::get(m)), e1(pbw::gen(f, Gen::e1)), e2(pbw::gen(f, Gen::e2)), e3(pbw::gen(f, Gen::e3)),
          z(pbw::gen(f, Gen::z)) {}
    CycNum q(long long e) const { return CycNum::q_pow(f, e); }
    PbwElement mono(int i, int j, int k, int n, const CycNum& c) const { return PbwElement(f, {i, j, k, n}, c); }
};

// Image of a PBW element in the quantum torus, monomial by monomial.
torus::LaurentElement to_torus(const torus::QCommAlgebra& t, const PbwElement& a) {
    using torus::LaurentElement;
    std::map<std::string, LaurentElement> img;
    for (const char* g : {"e1", "e2", "e3", "z"})
        img.emplace(g, torus::embedding_image(t, g, torus::E2Image::corrected));
    auto pow = [&](const LaurentElement& x, int e) {
        LaurentElement r = LaurentElement::unit(t);
        for (int s = 0; s < e; ++s) r = r * x;
        return r;
    };
    LaurentElement out(t);
    for (const auto& [m, c] : a.terms())
        out = out + c * (pow(img.at("z"), m.i) * pow(img.at("e3"), m.j) * pow(img.at("e1"), m.k) * pow(img.at("e2"), m.n));
    return out;
}

PbwElement random_element(const Fixture& x, std::mt19937& rng, int max_exp) {
    PbwElement out(x.f);
    std::uniform_int_distribution<int> e(0, max_exp), c(-3, 3), p(0, x.f.m() - 1);
    for (int t = 0; t < 3; ++t) out.add_term({e(rng), e(rng), e(rng), e(rng)}, CycNum(x.f, static_cast<long>(c(rng))) * x.q(p(rng)));
    return out;
}

}  // namespace

TEST(Pbw, DefiningProducts) {
    const Fixture x(5);
    EXPECT_EQ(x.e2 * x.e1, x.mono(0, 0, 1, 1, x.q(-2)) - x.mono(0, 1, 0, 0, x.q(-2)));
    EXPECT_EQ(x.e2 * x.e3, x.mono(0, 1, 0, 1, x.q(2)) + x.z);
    EXPECT_EQ(x.e1 * x.e3, x.mono(0, 1, 1, 0, x.q(-2)));
    EXPECT_EQ(x.e3 * x.z, x.z * x.e3);
    EXPECT_EQ(x.e1 * x.e2, x.mono(0, 0, 1, 1, x.q(0)));
}

TEST(Pbw, E2SquaredE1HasZTerm) {
    const Fixture x(7);
    const PbwElement p = x.e2 * x.e2 * x.e1;
    EXPECT_EQ(p.coeff({1, 0, 0, 0}), -x.q(-2));
    EXPECT_EQ(p.coeff({0, 0, 1, 2}), x.q(-4));
    EXPECT_EQ(p.size(), 3u);
}

TEST(Pbw, UnitAndZero) {
    const Fixture x(6);
    const PbwElement one = pbw::unit(x.f);
    EXPECT_EQ(one * x.e2, x.e2);
    EXPECT_EQ(x.e1 * one, x.e1);
    EXPECT_TRUE((x.e2 - x.e2).is_zero());
    EXPECT_TRUE(one.is_scalar());
    EXPECT_FALSE(x.e1.is_scalar());
}

TEST(Pbw, PowerMatchesRepeatedProduct) {
    const Fixture x(8);
    const PbwElement a = x.e2 + x.e1 * x.e3;
    EXPECT_EQ(pbw::power(a, 3), a * a * a);
    EXPECT_EQ(pbw::power(a, 0), pbw::unit(x.f));
}

TEST(Pbw, CentralityAtM6) {
    const Fixture x(6);
    EXPECT_TRUE(pbw::is_central(pbw::power(x.e2, 3)));
    EXPECT_FALSE(pbw::is_central(pbw::power(x.e2, 2)));
    EXPECT_TRUE(pbw::is_central(pbw::power(x.e1, 3)));
    EXPECT_TRUE(pbw::is_central(x.z));
    EXPECT_FALSE(pbw::is_central(x.e3));
    const auto w = pbw::centrality_witness(x.e1);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->against, Gen::e2);
}

TEST(Pbw, CommutationIdentitiesVanish) {
    for (int m : {5, 6, 8}) {
        const auto& f = FieldContext::get(m);
        for (int index = 1; index <= 4; ++index)
            for (int k = index == 4 ? 2 : 1; k <= 2 * f.l(); ++k)
                EXPECT_TRUE(pbw::commutation_identity(f, index, k).is_zero()) << "m=" << m << " item " << index << " k=" << k;
    }
}

TEST(Pbw, CommutationIdentityArgumentChecks) {
    const auto& f = FieldContext::get(5);
    EXPECT_THROW(pbw::commutation_identity(f, 1, 0), std::domain_error);
    EXPECT_THROW(pbw::commutation_identity(f, 4, 1), std::domain_error);
    EXPECT_THROW(pbw::commutation_identity(f, 5, 2), std::domain_error);
}

TEST(Pbw, LeadingTermUsesGradedOrder) {
    const Fixture x(5);
    const PbwElement a = x.mono(0, 0, 0, 2, x.q(1)) + x.mono(0, 0, 3, 0, x.q(2)) + x.z;
    const auto lt = pbw::leading_term(a);
    ASSERT_TRUE(lt.has_value());
    EXPECT_EQ(lt->first, (Monomial{0, 0, 3, 0}));
    EXPECT_FALSE(pbw::leading_term(PbwElement(x.f)).has_value());
}

TEST(Pbw, AgreesWithWordRewriting) {
    for (int m : {5, 6}) {
        const Fixture x(m);
        std::mt19937 rng(77 + m);
        for (int t = 0; t < 25; ++t) {
            const PbwElement a = random_element(x, rng, 2), b = random_element(x, rng, 2);
            EXPECT_EQ(a * b, word_rewrite::multiply(a, b)) << "m=" << m << " trial " << t;
        }
    }
}

TEST(Pbw, MultiplicationIsAssociative) {
    const Fixture x(7);
    std::mt19937 rng(5);
    for (int t = 0; t < 15; ++t) {
        const PbwElement a = random_element(x, rng, 2), b = random_element(x, rng, 2), c = random_element(x, rng, 2);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(Pbw, TorusImageIsMultiplicative) {
    for (int m : {5, 8}) {
        const Fixture x(m);
        const torus::QCommAlgebra t(x.f, torus::embedding_torus_skew(), true);
        std::mt19937 rng(11 + m);
        for (int trial = 0; trial < 10; ++trial) {
            const PbwElement a = random_element(x, rng, 2), b = random_element(x, rng, 2);
            EXPECT_EQ(to_torus(t, a * b), to_torus(t, a) * to_torus(t, b)) << "m=" << m << " trial " << trial;
        }
    }
}

TEST(Pbw, MixedFieldsRejected) {
    const PbwElement a = pbw::gen(FieldContext::get(5), Gen::e1);
    const PbwElement b = pbw::gen(FieldContext::get(7), Gen::e1);
    EXPECT_THROW(a + b, std::invalid_argument);
}
