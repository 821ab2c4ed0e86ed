#pragma once

// Isomorphism tests between family members: the parameter predicates of
// the classification, and a brute-force intertwiner search to check them.
//
// With right modules and row vectors, a homomorphism V -> W with matrix T
// satisfies A_V(g) T = T A_W(g) for every generator g.

#include "matrix.hpp"
#include "repmod.hpp"

#include <optional>
#include <random>
#include <vector>

namespace uqb2::isoclass {

using repmod::Family;
using repmod::ModuleParams;
using repmod::Representation;

struct IsoVerdict {
    bool isomorphic = false;
    std::optional<int> witness_p;
    std::optional<Matrix> intertwiner;
};

/// Whether the parameter equations hold for this shift p.
inline bool predicate_holds_at(const FieldContext& f, const ModuleParams& a, const ModuleParams& b, int p) {
    auto q = [&](long long e) { return CycNum::q_pow(f, e); };
    const int l = f.l();
    switch (a.family) {
    case Family::V1:
    case Family::V1p:
        return a.alpha().pow(l) == b.alpha().pow(l) && a.beta() == q(-2 * p) * b.beta() && a.gamma() == b.gamma() &&
               a.delta() == b.delta() + q_bracket(f, p, -4) * b.beta() * b.beta();
    case Family::V2:
    case Family::V2p:
        return a.alpha().pow(l) == b.alpha().pow(l) && a.beta() == q(2 * p) * b.beta() && a.gamma() == b.gamma();
    case Family::V3:
    case Family::V3p:
        return a.alpha() == q(2 * p) * b.alpha() && a.beta() == b.beta();
    case Family::V4p: {
        const CycNum ratio = q_bracket(f, p + 1, 2);
        if (ratio.is_zero()) return false;  // alpha_1 must stay nonzero
        return a.alpha() == ratio * b.alpha() && a.beta() == q(-2 * p) * b.beta() && a.gamma() == b.gamma();
    }
    }
    return false;
}

/// Scans p in [0, l-1] for a shift satisfying the parameter equations.
/// Different families are never isomorphic.
inline IsoVerdict iso_predicate(const FieldContext& f, const ModuleParams& a, const ModuleParams& b) {
    IsoVerdict v;
    if (a.family != b.family) return v;
    repmod::validate(a);
    repmod::validate(b);
    for (int p = 0; p < f.l(); ++p)
        if (predicate_holds_at(f, a, b, p)) {
            v.isomorphic = true;
            v.witness_p = p;
            break;
        }
    return v;
}

/// Basis of { T : A1(g) T = T A2(g) for all g }, each T as a matrix.
inline std::vector<Matrix> hom_space(const Representation& r1, const Representation& r2) {
    const FieldContext& f = r1.field();
    const std::size_t n1 = r1.dim, n2 = r2.dim, vars = n1 * n2;
    std::vector<std::vector<CycNum>> rows;
    for (const auto& g : r1.generators) {
        const Matrix &a1 = r1[g], &a2 = r2[g];
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n2; ++j) {
                // (A1 T)[i][j] - (T A2)[i][j]; T[k][j] is variable k*n2 + j.
                std::vector<CycNum> row(vars, CycNum(f));
                for (std::size_t k = 0; k < n1; ++k)
                    if (!a1(i, k).is_zero()) row[k * n2 + j] += a1(i, k);
                for (std::size_t k = 0; k < n2; ++k)
                    if (!a2(k, j).is_zero()) row[i * n2 + k] -= a2(k, j);
                if (!EchelonSpan::is_zero_vec(row)) rows.push_back(std::move(row));
            }
    }
    std::vector<Matrix> out;
    for (const auto& x : null_space(f, std::move(rows), vars)) {
        Matrix t(f, n1, n2);
        for (std::size_t k = 0; k < vars; ++k) t(k / n2, k % n2) = x[k];
        out.push_back(std::move(t));
    }
    return out;
}

/// An invertible intertwiner r1 -> r2, if one is found.  Each basis element
/// of the solution space is tried, then a fixed number of random integer
/// combinations; for simple modules the space has dimension at most 1 and
/// the answer is exact, otherwise an invertible element may be missed.
inline std::optional<Matrix> find_intertwiner(const Representation& r1, const Representation& r2,
                                              int random_trials = 16) {
    if (r1.dim != r2.dim || r1.generators != r2.generators) return std::nullopt;
    const auto basis = hom_space(r1, r2);
    for (const auto& t : basis)
        if (t.rank() == t.rows()) return t;
    if (basis.size() < 2) return std::nullopt;
    const FieldContext& f = r1.field();
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int trial = 0; trial < random_trials; ++trial) {
        Matrix t(f, r1.dim, r1.dim);
        for (const auto& b : basis) t = t + CycNum(f, coeff(rng)) * b;
        if (t.rank() == t.rows()) return t;
    }
    return std::nullopt;
}

inline IsoVerdict iso_by_solver(const Representation& r1, const Representation& r2) {
    IsoVerdict v;
    v.intertwiner = find_intertwiner(r1, r2);
    v.isomorphic = v.intertwiner.has_value();
    return v;
}

/// The explicit isomorphism v_k -> (alpha_2/alpha_1)^k v_{k+p} between
/// members of V1p (or V1) whose parameters are related with shift p.
inline Matrix explicit_v1_map(const FieldContext& f, const ModuleParams& a, const ModuleParams& b, int p) {
    const std::size_t n = static_cast<std::size_t>(f.l());
    const CycNum ratio = b.alpha() / a.alpha();
    Matrix t(f, n, n);
    for (std::size_t k = 0; k < n; ++k) t(k, (k + static_cast<std::size_t>(p)) % n) = ratio.pow(static_cast<long long>(k));
    return t;
}

/// True iff t intertwines every generator action of r1 and r2.
inline bool intertwines(const Matrix& t, const Representation& r1, const Representation& r2) {
    for (const auto& g : r1.generators)
        if (!(r1[g] * t == t * r2[g])) return false;
    return true;
}

}  // namespace uqb2::isoclass
