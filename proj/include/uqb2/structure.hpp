#pragma once

// Derived elements of U_q^+(B_2) (z-tilde, z_1, z') and the checks built on
// them: twisted commutation relations, the GWA normal-element condition,
// the identities of the subalgebra B, and the center report.

#include "pbw.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqb2::structure {

enum class Named { e3_as_commutator, z_as_commutator, z_tilde, z_one, z_prime };

inline const char* named_label(Named n) {
    switch (n) {
    case Named::e3_as_commutator: return "e3_as_commutator";
    case Named::z_as_commutator: return "z_as_commutator";
    case Named::z_tilde: return "z_tilde";
    case Named::z_one: return "z_one";
    case Named::z_prime: return "z_prime";
    }
    return "?";
}

inline PbwElement named(const FieldContext& f, Named which) {
    auto q = [&](long long e) { return CycNum::q_pow(f, e); };
    const CycNum one(f, 1L);
    const PbwElement e1 = pbw::gen(f, Gen::e1), e2 = pbw::gen(f, Gen::e2);
    const PbwElement e3 = pbw::gen(f, Gen::e3), z = pbw::gen(f, Gen::z);
    switch (which) {
    case Named::e3_as_commutator:
        return e1 * e2 - q(2) * (e2 * e1);
    case Named::z_as_commutator:
        return e2 * e3 - q(2) * (e3 * e2);
    case Named::z_tilde:
        return e2 * e3 + z * (one / (q(2) - one));
    case Named::z_one:
        return e1 * named(f, Named::z_tilde) + (e3 * e3) * (one / (q(4) - one));
    case Named::z_prime: {
        // z' = e1 (z + (q^2-1) e3 e2) - q^4 (z + (q^2-1) e3 e2) e1, as printed.
        const PbwElement w = z + (q(2) - one) * (e3 * e2);
        return e1 * w - q(4) * (w * e1);
    }
    }
    throw std::invalid_argument("named: unknown element");
}

/// z_1 in the ordered form e1 e2 e3 + e1 z/(q^2-1) + e3^2/(q^4-1).
inline PbwElement z_one_ordered_form(const FieldContext& f) {
    auto q = [&](long long e) { return CycNum::q_pow(f, e); };
    const CycNum one(f, 1L);
    const PbwElement e1 = pbw::gen(f, Gen::e1), e2 = pbw::gen(f, Gen::e2);
    const PbwElement e3 = pbw::gen(f, Gen::e3), z = pbw::gen(f, Gen::z);
    return e1 * e2 * e3 + (e1 * z) * (one / (q(2) - one)) + (e3 * e3) * (one / (q(4) - one));
}

/// x g - mu g x - corr.
inline PbwElement twisted_commutation_residual(const PbwElement& x, const PbwElement& g, const CycNum& mu,
                                               const PbwElement& corr) {
    return x * g - mu * (g * x) - corr;
}

/// Diagonal automorphism of a commutative polynomial subalgebra: each listed
/// generator is scaled by its scalar.
using SigmaSpec = std::map<Gen, CycNum>;

inline PbwElement apply_sigma(const PbwElement& alpha, const SigmaSpec& sigma) {
    const FieldContext& f = alpha.field();
    auto scale_for = [&](Gen g, int e) -> CycNum {
        if (e == 0) return CycNum(f, 1L);
        auto it = sigma.find(g);
        if (it == sigma.end())
            throw std::invalid_argument(std::string("gwa_condition: alpha involves ") + gen_name(g) +
                                        ", which sigma does not act on");
        return it->second.pow(e);
    };
    PbwElement out(f);
    for (const auto& [mono, c] : alpha.terms())
        out.add_term(mono, c * scale_for(Gen::z, mono.i) * scale_for(Gen::e3, mono.j) * scale_for(Gen::e1, mono.k) *
                               scale_for(Gen::e2, mono.n));
    return out;
}

/// rho*alpha - sigma(alpha) == b.
inline bool gwa_condition(const CycNum& rho, const PbwElement& alpha, const PbwElement& b, const SigmaSpec& sigma) {
    return rho * alpha - apply_sigma(alpha, sigma) == b;
}

/// Residuals of the two B-identities
///   1. e1^a zt = zt e1^a + (1-q^{-4a})/(1-q^{-4}) e3^2 e1^{a-1}
///   2. e1 zt^a = zt^a e1 + (1-q^{4a})/(1-q^4) e3^2 zt^{a-1}
inline PbwElement b_identities(const FieldContext& f, int index, int a) {
    if (a < 1) throw std::domain_error("b_identities: a must be >= 1");
    const PbwElement e1 = pbw::gen(f, Gen::e1), e3 = pbw::gen(f, Gen::e3);
    const PbwElement zt = named(f, Named::z_tilde);
    const PbwElement e3sq = e3 * e3;
    switch (index) {
    case 1: {
        const PbwElement e1a = pbw::power(e1, a);
        return e1a * zt - zt * e1a - q_bracket(f, a, -4) * (e3sq * pbw::power(e1, a - 1));
    }
    case 2: {
        const PbwElement zta = pbw::power(zt, a);
        return e1 * zta - zta * e1 - q_bracket(f, a, 4) * (e3sq * pbw::power(zt, a - 1));
    }
    default:
        throw std::domain_error("b_identities: index must be 1 or 2");
    }
}

/// True iff x commutes with every generator of B (e1, e3, z, zt).
inline bool is_central_in_b(const PbwElement& x) {
    const FieldContext& f = x.field();
    const CycNum one(f, 1L);
    const PbwElement zero(f);
    for (const PbwElement& g : {pbw::gen(f, Gen::e1), pbw::gen(f, Gen::e3), pbw::gen(f, Gen::z), named(f, Named::z_tilde)})
        if (!twisted_commutation_residual(x, g, one, zero).is_zero()) return false;
    return true;
}

struct CenterReport {
    int m = 0;
    int l = 0;
    std::map<std::string, bool> central;    // e1^l, e2^l, e3^l, z, z1
    bool z_prime_central = false;           // measured, not assumed
    std::optional<pbw::CentralityWitness> z_prime_witness;
    std::map<std::string, bool> b_central;  // z, e1^l, e3^l, zt^l in B
    bool z_one_forms_agree = false;

    bool contracted_ok() const {
        for (const auto& [_, v] : central)
            if (!v) return false;
        for (const auto& [_, v] : b_central)
            if (!v) return false;
        return z_one_forms_agree;
    }
};

inline CenterReport center_report(const FieldContext& f) {
    CenterReport r;
    r.m = f.m();
    r.l = f.l();
    const int l = f.l();
    const PbwElement e1 = pbw::gen(f, Gen::e1), e2 = pbw::gen(f, Gen::e2);
    const PbwElement e3 = pbw::gen(f, Gen::e3), z = pbw::gen(f, Gen::z);
    const PbwElement zt = named(f, Named::z_tilde);
    const PbwElement e1l = pbw::power(e1, l), e3l = pbw::power(e3, l);

    r.central["e1^l"] = pbw::is_central(e1l);
    r.central["e2^l"] = pbw::is_central(pbw::power(e2, l));
    r.central["e3^l"] = pbw::is_central(e3l);
    r.central["z"] = pbw::is_central(z);
    const PbwElement z1 = named(f, Named::z_one);
    r.central["z1"] = pbw::is_central(z1);

    r.z_prime_witness = pbw::centrality_witness(named(f, Named::z_prime));
    r.z_prime_central = !r.z_prime_witness.has_value();

    r.b_central["z"] = is_central_in_b(z);
    r.b_central["e1^l"] = is_central_in_b(e1l);
    r.b_central["e3^l"] = is_central_in_b(e3l);
    r.b_central["zt^l"] = is_central_in_b(pbw::power(zt, l));

    r.z_one_forms_agree = z1 == z_one_ordered_form(f);
    return r;
}

}  // namespace uqb2::structure
