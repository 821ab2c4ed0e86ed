#pragma once

// Finite-dimensional module families as explicit action matrices.  Modules
// are right modules: the matrix of g has entry [k][j] equal to the
// coefficient of v_j in v_k g, so a word g1 g2 acts by M(g1) M(g2).

#include "cyclotomic.hpp"
#include "matrix.hpp"
#include "relations.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqb2::repmod {

enum class Family { V1, V2, V3, V1p, V2p, V3p, V4p };

inline const std::vector<Family>& all_families() {
    static const std::vector<Family> all{Family::V1, Family::V2, Family::V3, Family::V1p,
                                         Family::V2p, Family::V3p, Family::V4p};
    return all;
}

inline const char* family_name(Family f) {
    switch (f) {
    case Family::V1: return "V1";
    case Family::V2: return "V2";
    case Family::V3: return "V3";
    case Family::V1p: return "V1p";
    case Family::V2p: return "V2p";
    case Family::V3p: return "V3p";
    case Family::V4p: return "V4p";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    for (Family f : all_families())
        if (s == family_name(f)) return f;
    throw std::invalid_argument("unknown module family: " + s);
}

/// Modules over the subalgebra B (generators e1, e3, z, zt) versus modules
/// over the whole algebra (e1, e2, e3, z).
inline bool is_b_family(Family f) { return f == Family::V1 || f == Family::V2 || f == Family::V3; }

inline std::size_t arity(Family f) {
    switch (f) {
    case Family::V1:
    case Family::V1p: return 4;
    case Family::V3:
    case Family::V3p: return 2;
    default: return 3;
    }
}

/// Which parameters must be nonzero, by position.
inline std::vector<bool> nonzero_mask(Family f) {
    switch (f) {
    case Family::V1:
    case Family::V1p: return {true, true, true, false};
    case Family::V4p: return {true, false, false};
    case Family::V3:
    case Family::V3p: return {true, true};
    default: return {true, true, true};
    }
}

/// How to read the diagonal part of e2 on V1p: as displayed,
/// -gamma/(q^2-1) beta^-1 v_k, or with the factor q^{2k} that the
/// e2 = (zt - z/(q^2-1)) e3^-1 correspondence produces.  Other families
/// ignore the choice.
enum class Variant { printed, corrected };

struct ModuleParams {
    Family family;
    std::vector<CycNum> values;  // alpha, beta, gamma, delta as far as the family uses them
    Variant variant = Variant::printed;

    const CycNum& alpha() const { return values.at(0); }
    const CycNum& beta() const { return values.at(1); }
    const CycNum& gamma() const { return values.at(2); }
    const CycNum& delta() const { return values.at(3); }
};

inline void validate(const ModuleParams& p) {
    static const char* names[] = {"alpha", "beta", "gamma", "delta"};
    const std::size_t n = arity(p.family);
    if (p.values.size() != n)
        throw std::invalid_argument(std::string(family_name(p.family)) + " takes " + std::to_string(n) +
                                    " parameters, got " + std::to_string(p.values.size()));
    const auto mask = nonzero_mask(p.family);
    for (std::size_t i = 0; i < n; ++i)
        if (mask[i] && p.values[i].is_zero())
            throw std::invalid_argument(std::string(family_name(p.family)) + ": parameter " + names[i] +
                                        " must be nonzero");
}

struct Representation {
    ModuleParams params;
    std::size_t dim = 0;
    std::vector<std::string> generators;  // in a fixed order
    std::map<std::string, Matrix> act;

    const FieldContext& field() const { return act.begin()->second.field(); }
    const Matrix& operator[](const std::string& g) const {
        auto it = act.find(g);
        if (it == act.end()) throw std::invalid_argument("representation has no generator " + g);
        return it->second;
    }
};

/// Number of basis vectors of the family at this root of unity.
inline std::size_t family_dim(const FieldContext& f, Family fam) {
    if (fam == Family::V3 || fam == Family::V3p) return static_cast<std::size_t>(ord_q_pow(f, 4));
    return static_cast<std::size_t>(f.l());
}

namespace detail {

struct Builder {
    const FieldContext& f;
    std::size_t n;
    CycNum q(long long e) const { return CycNum::q_pow(f, e); }
    CycNum one() const { return CycNum(f, 1L); }
    std::size_t wrap(long long k) const {
        const long long d = static_cast<long long>(n);
        return static_cast<std::size_t>(((k % d) + d) % d);
    }
    Matrix zero() const { return Matrix(f, n, n); }
    Matrix scalar(const CycNum& c) const { return Matrix::scalar(c, n); }
};

}  // namespace detail

/// Builds the action matrices of a family member.
inline Representation build(const FieldContext& f, const ModuleParams& p) {
    validate(p);
    for (const auto& v : p.values)
        if (&v.field() != &f) throw std::invalid_argument("build: parameter from a different field");

    const std::size_t n = family_dim(f, p.family);
    const detail::Builder b{f, n};
    auto q = [&](long long e) { return b.q(e); };
    const CycNum one = b.one();
    const long long last = static_cast<long long>(n) - 1;

    Representation rep{p, n, {}, {}};
    Matrix e1 = b.zero(), e2 = b.zero(), e3 = b.zero(), zt = b.zero();
    Matrix z = b.zero();

    switch (p.family) {
    case Family::V1:
    case Family::V1p: {
        const CycNum &al = p.alpha(), &be = p.beta(), &ga = p.gamma(), &de = p.delta();
        const CycNum inv_al = al.inverse(), inv_be = be.inverse();
        for (long long k = 0; k <= last; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            e1(kk, b.wrap(k + 1)) = al;
            e3(kk, kk) = q(-2 * k) * be;
            const CycNum shift = inv_al * (de + q_bracket(f, k, -4) * be * be);
            zt(kk, b.wrap(k - 1)) = shift;
            e2(kk, b.wrap(k - 1)) += shift * q(2 * (k - 1)) * inv_be;
            const CycNum diag = -(ga / (q(2) - one)) * inv_be;
            e2(kk, kk) += p.variant == Variant::corrected ? diag * q(2 * k) : diag;
        }
        z = b.scalar(ga);
        break;
    }
    case Family::V2:
    case Family::V2p: {
        const CycNum &al = p.alpha(), &be = p.beta(), &ga = p.gamma();
        const CycNum inv_al = al.inverse(), inv_be = be.inverse();
        for (long long k = 0; k <= last; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            if (k != 0) e1(kk, b.wrap(k - 1)) = inv_al * be * be * ((q(4 * k) - one) / (one - q(4)));
            e3(kk, kk) = q(2 * k) * be;
            zt(kk, b.wrap(k + 1)) = al;
            e2(kk, b.wrap(k + 1)) += al * inv_be * q(-2 * (k + 1));
            e2(kk, kk) += -(ga * inv_be / (q(2) - one)) * q(-2 * k);
        }
        z = b.scalar(ga);
        break;
    }
    case Family::V3:
    case Family::V3p: {
        const CycNum &al = p.alpha(), &be = p.beta();
        const CycNum inv_al = al.inverse();
        for (long long k = 0; k <= last; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            if (k != 0) e1(kk, kk - 1) = al * al * ((q(4 * k) - one) / (one - q(4)));
            e3(kk, kk) = q(2 * k) * al;
            if (k != last) {
                zt(kk, kk + 1) = one;
                e2(kk, kk + 1) += inv_al * q(-2 * (k + 1));
            }
            e2(kk, kk) += -(be * inv_al / (q(2) - one)) * q(-2 * k);
        }
        z = b.scalar(be);
        break;
    }
    case Family::V4p: {
        const CycNum &al = p.alpha(), &be = p.beta(), &ga = p.gamma();
        const CycNum denom = (q(4) - one) * (q(2) - one);
        for (long long k = 0; k <= last; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            e1(kk, kk) = be * q(-2 * k);
            if (k >= 2)
                e1(kk, kk - 2) = -(q(-2 * (k - 1)) * (q(2 * k) - one) * (q(2 * (k - 1)) - one) / denom) * al;
            if (k != last)
                e2(kk, kk + 1) = one;
            else
                e2(kk, 0) = ga;
            if (k != 0) e3(kk, kk - 1) = al * ((q(2 * k) - one) / (q(2) - one));
        }
        z = b.scalar(al);
        break;
    }
    }

    if (is_b_family(p.family)) {
        rep.generators = {"e1", "e3", "z", "zt"};
        rep.act.emplace("e1", std::move(e1));
        rep.act.emplace("e3", std::move(e3));
        rep.act.emplace("z", std::move(z));
        rep.act.emplace("zt", std::move(zt));
    } else {
        rep.generators = {"e1", "e2", "e3", "z"};
        rep.act.emplace("e1", std::move(e1));
        rep.act.emplace("e2", std::move(e2));
        rep.act.emplace("e3", std::move(e3));
        rep.act.emplace("z", std::move(z));
    }
    return rep;
}

/// Block-diagonal sum of two representations on the same generators.
inline Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.generators != b.generators) throw std::invalid_argument("direct_sum: generator sets differ");
    const FieldContext& f = a.field();
    Representation out{a.params, a.dim + b.dim, a.generators, {}};
    for (const auto& g : a.generators) {
        Matrix m(f, out.dim, out.dim);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) m(i, j) = a[g](i, j);
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b[g](i, j);
        out.act.emplace(g, std::move(m));
    }
    return out;
}

/// Relations the family must satisfy: B's relations for B-modules, the
/// presentation plus both Serre relations otherwise.
inline std::vector<Relation> relations_for(const FieldContext& f, const Representation& rep) {
    return is_b_family(rep.params.family) ? relations::b_algebra(f) : relations::full(f);
}

struct ResidualReport {
    std::vector<std::pair<std::string, Matrix>> residuals;
    bool all_zero() const {
        for (const auto& [_, r] : residuals)
            if (!r.is_zero()) return false;
        return true;
    }
};

inline ResidualReport verify_relations(const Representation& rep, const std::vector<Relation>& rels) {
    const FieldContext& f = rep.field();
    const Matrix one = Matrix::identity(f, rep.dim), zero(f, rep.dim, rep.dim);
    auto scale = [](const CycNum& c, const Matrix& m) { return c * m; };
    ResidualReport out;
    for (const auto& r : rels) out.residuals.emplace_back(r.name, evaluate(r.poly, rep.act, one, zero, scale));
    return out;
}

inline ResidualReport verify_relations(const Representation& rep) {
    return verify_relations(rep, relations_for(rep.field(), rep));
}

inline std::vector<CycNum> flatten(const Matrix& m) { return m.data(); }

struct SimplicityResult {
    bool simple = false;
    std::size_t certificate = 0;  // dimension of the algebra generated by the action
};

/// Dimension of the algebra generated by the action matrices, by closing the
/// span of words under right multiplication by generators.  The module is
/// absolutely simple exactly when this reaches dim^2.
inline SimplicityResult is_simple(const Representation& rep) {
    const FieldContext& f = rep.field();
    const std::size_t n = rep.dim, full = n * n;
    EchelonSpan span(f, full);
    std::vector<Matrix> frontier;
    const Matrix id = Matrix::identity(f, n);
    span.insert(flatten(id));
    frontier.push_back(id);
    for (std::size_t next = 0; next < frontier.size() && span.dim() < full; ++next)
        for (const auto& g : rep.generators) {
            Matrix w = frontier[next] * rep[g];
            if (span.insert(flatten(w))) {
                frontier.push_back(std::move(w));
                if (span.dim() == full) break;
            }
        }
    return {span.dim() == full, span.dim()};
}

struct CentralCharacter {
    std::vector<std::pair<std::string, std::optional<CycNum>>> scalars;  // nullopt: not scalar
    std::map<std::string, bool> annihilates;  // which powers act as zero
    bool all_scalar() const {
        for (const auto& [_, s] : scalars)
            if (!s) return false;
        return true;
    }
    bool pattern_ok = false;  // annihilation pattern as expected for the family
};

inline Matrix z_tilde_matrix(const Representation& rep) {
    if (is_b_family(rep.params.family)) return rep["zt"];
    const FieldContext& f = rep.field();
    const CycNum one(f, 1L);
    return rep["e2"] * rep["e3"] + (one / (CycNum::q_pow(f, 2) - one)) * rep["z"];
}

/// Expected annihilation pattern: true means the power acts as zero.
inline std::map<std::string, bool> expected_annihilation(Family fam) {
    switch (fam) {
    case Family::V1:
    case Family::V1p: return {{"e1^l", false}, {"e3^l", false}};
    case Family::V2:
    case Family::V2p: return {{"e1^l", true}, {"zt^l", false}, {"e3^l", false}};
    case Family::V3:
    case Family::V3p: return {{"e1^l", true}, {"zt^l", true}, {"e3^l", false}};
    case Family::V4p: return {{"e3^l", true}};
    }
    return {};
}

inline CentralCharacter central_character(const Representation& rep) {
    const FieldContext& f = rep.field();
    const int l = f.l();
    const CycNum one(f, 1L);
    CentralCharacter out;
    const Matrix zt = z_tilde_matrix(rep);
    auto record = [&](const std::string& name, const Matrix& m) { out.scalars.emplace_back(name, m.as_scalar()); };

    const Matrix e1l = rep["e1"].pow(l), e3l = rep["e3"].pow(l), ztl = zt.pow(l);
    record("e1^l", e1l);
    if (!is_b_family(rep.params.family)) record("e2^l", rep["e2"].pow(l));
    record("e3^l", e3l);
    record("z", rep["z"]);
    if (is_b_family(rep.params.family)) {
        record("zt^l", ztl);
    } else {
        const Matrix z1 = rep["e1"] * zt + (one / (CycNum::q_pow(f, 4) - one)) * (rep["e3"] * rep["e3"]);
        record("z1", z1);
    }

    out.annihilates = {{"e1^l", e1l.is_zero()}, {"e3^l", e3l.is_zero()}, {"zt^l", ztl.is_zero()}};
    out.pattern_ok = true;
    for (const auto& [name, expect] : expected_annihilation(rep.params.family))
        if (out.annihilates.at(name) != expect) out.pattern_ok = false;
    return out;
}

/// For the primed families with invertible e3: the e2 action rebuilt as
/// (zt - z/(q^2-1)) e3^-1 from the matching B-module equals the displayed one.
inline bool correspondence_holds(const FieldContext& f, const ModuleParams& primed) {
    Family base;
    switch (primed.family) {
    case Family::V1p: base = Family::V1; break;
    case Family::V2p: base = Family::V2; break;
    case Family::V3p: base = Family::V3; break;
    default: throw std::invalid_argument("correspondence_holds: needs V1p, V2p or V3p");
    }
    const Representation direct = build(f, primed);
    const Representation b_mod = build(f, ModuleParams{base, primed.values, primed.variant});
    const auto e3_inv = b_mod["e3"].inverse();
    if (!e3_inv) return false;
    const CycNum one(f, 1L);
    const Matrix rebuilt = (b_mod["zt"] - (one / (CycNum::q_pow(f, 2) - one)) * b_mod["z"]) * *e3_inv;
    return rebuilt == direct["e2"] && b_mod["e1"] == direct["e1"] && b_mod["e3"] == direct["e3"] &&
           b_mod["z"] == direct["z"];
}

}  // namespace uqb2::repmod
