#include "uqb2/structure.hpp"

#include <gtest/gtest.h>

using namespace uqb2;
using structure::Named;

namespace {

struct Fixture {
    const FieldContext& f;
    PbwElement e1, e2, e3, z, zt, zero;
    CycNum one;
    explicit Fixture(int m)
        : f(FieldContext::get(m)), e1(pbw::gen(f, Gen::e1)), e2(pbw::gen(f, Gen::e2)), e3(pbw::gen(f, Gen::e3)),
          z(pbw::gen(f, Gen::z)), zt(structure::named(f, Named::z_tilde)), zero(f), one(f, 1L) {}
    CycNum q(long long e) const { return CycNum::q_pow(f, e); }
};

}  // namespace

TEST(Named, CommutatorFormsAreBasisMonomials) {
    for (int m : {5, 6, 8, 12}) {
        const Fixture x(m);
        EXPECT_EQ(structure::named(x.f, Named::e3_as_commutator), x.e3) << m;
        EXPECT_EQ(structure::named(x.f, Named::z_as_commutator), x.z) << m;
    }
}

TEST(Named, ZTildeNormalForm) {
    const Fixture x(7);
    const PbwElement expect = x.q(2) * (x.e3 * x.e2) + (x.q(2) / (x.q(2) - x.one)) * x.z;
    EXPECT_EQ(x.zt, expect);
}

TEST(Named, ZOneFormsAgree) {
    for (int m : {5, 6, 8, 12}) {
        const auto& f = FieldContext::get(m);
        EXPECT_EQ(structure::named(f, Named::z_one), structure::z_one_ordered_form(f)) << m;
    }
}

TEST(TwistedCommutation, ZTildeRelations) {
    for (int m : {5, 8}) {
        const Fixture x(m);
        EXPECT_TRUE(structure::twisted_commutation_residual(x.zt, x.e2, x.q(-2), x.zero).is_zero());
        EXPECT_TRUE(structure::twisted_commutation_residual(x.zt, x.e3, x.q(2), x.zero).is_zero());
        EXPECT_TRUE(structure::twisted_commutation_residual(x.zt, x.z, x.one, x.zero).is_zero());
        EXPECT_TRUE(structure::twisted_commutation_residual(x.zt, x.e1, x.one, -(x.e3 * x.e3)).is_zero());
        EXPECT_TRUE(structure::twisted_commutation_residual(x.e3, x.e3, x.one, x.zero).is_zero());
    }
}

TEST(TwistedCommutation, WrongTwistLeavesResidual) {
    const Fixture x(5);
    EXPECT_FALSE(structure::twisted_commutation_residual(x.zt, x.e2, x.q(2), x.zero).is_zero());
}

TEST(Gwa, InstanceA) {
    const Fixture x(5);
    const PbwElement alpha = x.z * (x.one / (x.q(2) - x.one));
    EXPECT_TRUE(structure::gwa_condition(x.q(2), alpha, x.z, {{Gen::z, x.one}}));
}

TEST(Gwa, InstanceB) {
    const Fixture x(6);
    const PbwElement alpha = (x.e3 * x.e3) * (x.one / (x.one - x.q(-4)));
    EXPECT_TRUE(structure::gwa_condition(x.one, alpha, x.e3 * x.e3, {{Gen::z, x.one}, {Gen::e3, x.q(-2)}}));
}

TEST(Gwa, WrongSolutionRejected) {
    for (int m : {5, 6, 8}) {
        const Fixture x(m);
        EXPECT_FALSE(structure::gwa_condition(x.q(2), x.z, x.z, {{Gen::z, x.one}})) << m;
    }
}

TEST(Gwa, SigmaMustCoverAlpha) {
    const Fixture x(5);
    EXPECT_THROW(structure::gwa_condition(x.one, x.e1, x.e1, {{Gen::z, x.one}}), std::invalid_argument);
}

TEST(BIdentities, Vanish) {
    const Fixture x5(5), x6(6);
    EXPECT_TRUE(structure::b_identities(x5.f, 1, 1).is_zero());
    EXPECT_TRUE(structure::b_identities(x5.f, 2, 2).is_zero());
    EXPECT_TRUE(structure::b_identities(x6.f, 1, 2 * x6.f.l()).is_zero());
    for (int a = 1; a <= 4; ++a) EXPECT_TRUE(structure::b_identities(x6.f, 2, a).is_zero()) << a;
    EXPECT_THROW(structure::b_identities(x5.f, 3, 1), std::domain_error);
    EXPECT_THROW(structure::b_identities(x5.f, 1, 0), std::domain_error);
}

TEST(Center, ReportAllCentral) {
    for (int m : {5, 6, 8}) {
        const auto r = structure::center_report(FieldContext::get(m));
        EXPECT_TRUE(r.contracted_ok()) << m;
        for (const auto& [name, v] : r.central) EXPECT_TRUE(v) << name << " m=" << m;
    }
}

TEST(Center, NonCentralControls) {
    const Fixture x(5);
    EXPECT_FALSE(pbw::is_central(pbw::power(x.e3, x.f.l() - 1)));
    EXPECT_FALSE(pbw::is_central(pbw::power(x.e1, x.f.l() - 1)));
    EXPECT_FALSE(structure::is_central_in_b(pbw::power(x.zt, x.f.l() - 1)));
}
