#pragma once

// The acceptance suite: twelve criteria, each a list of exact checks with a
// runtime budget.  Used by the acceptance test binary and the CLI.

#include "cyclotomic.hpp"
#include "expr.hpp"
#include "isoclass.hpp"
#include "lattice.hpp"
#include "pbw.hpp"
#include "relations.hpp"
#include "repmod.hpp"
#include "structure.hpp"
#include "torus.hpp"
#include "word_rewrite.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace uqb2::conformance {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
    bool contracted = true;  // false: reported for information only
};

struct CriterionResult {
    int id = 0;
    std::string title;
    double budget_seconds = 0;
    double seconds = 0;
    std::vector<Check> checks;

    bool checks_ok() const {
        for (const auto& c : checks)
            if (c.contracted && !c.ok) return false;
        return true;
    }
    bool within_budget() const { return seconds <= budget_seconds; }
    bool passed() const { return checks_ok() && within_budget(); }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.contracted && !c.ok;
        return n;
    }
};

/// Restricts every criterion to one root of unity when set.
struct Options {
    std::optional<int> m;
};

namespace detail {

inline std::vector<int> ms(const Options& o, std::vector<int> defaults) {
    if (o.m) return {*o.m};
    return defaults;
}

inline std::string residual_text(const PbwElement& r) { return r.is_zero() ? "0" : expr::to_expr(r); }

template <class Fn>
CriterionResult timed(int id, std::string title, double budget, Fn&& body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.budget_seconds = budget;
    const auto t0 = std::chrono::steady_clock::now();
    body(r.checks);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::string tag(int m) { return "m=" + std::to_string(m); }

}  // namespace detail

/// Small nonzero field elements c q^a, sometimes plus q^b.
inline CycNum sample_scalar(const FieldContext& f, std::mt19937& rng) {
    static const long nums[] = {1, 2, -1, 3, -2, 1};
    static const long dens[] = {1, 1, 1, 1, 1, 2};
    const auto pick = rng() % 6;
    CycNum c(f, mpq_class(nums[pick], dens[pick]));
    c = c * CycNum::q_pow(f, static_cast<long long>(rng() % static_cast<unsigned>(f.m())));
    if (rng() % 3 == 0) c = c + CycNum::q_pow(f, static_cast<long long>(rng() % static_cast<unsigned>(f.m())));
    return c.is_zero() ? CycNum(f, 1L) : c;
}

inline repmod::ModuleParams sample_params(const FieldContext& f, repmod::Family fam, std::mt19937& rng,
                                          repmod::Variant variant = repmod::Variant::printed) {
    const auto mask = repmod::nonzero_mask(fam);
    std::vector<CycNum> vals;
    for (bool nonzero : mask) vals.push_back(!nonzero && rng() % 4 == 0 ? CycNum(f) : sample_scalar(f, rng));
    return {fam, std::move(vals), variant};
}

/// A parameter tuple related to `base` by the classification equations with
/// shift p (and an l-th root of unity twist of alpha where allowed).
inline repmod::ModuleParams related_params(const FieldContext& f, const repmod::ModuleParams& base, int p, int twist) {
    using repmod::Family;
    auto q = [&](long long e) { return CycNum::q_pow(f, e); };
    auto a = base;
    auto& v = a.values;
    const auto& b = base.values;
    switch (base.family) {
    case Family::V1:
    case Family::V1p:
        v[0] = b[0] * q(2LL * twist);
        v[1] = q(-2LL * p) * b[1];
        v[3] = b[3] + q_bracket(f, p, -4) * b[1] * b[1];
        break;
    case Family::V2:
    case Family::V2p:
        v[0] = b[0] * q(2LL * twist);
        v[1] = q(2LL * p) * b[1];
        break;
    case Family::V3:
    case Family::V3p:
        v[0] = q(2LL * p) * b[0];
        break;
    case Family::V4p: {
        CycNum ratio = q_bracket(f, p + 1, 2);
        if (ratio.is_zero()) {
            p = 0;
            ratio = CycNum(f, 1L);
        }
        v[0] = ratio * b[0];
        v[1] = q(-2LL * p) * b[1];
        break;
    }
    }
    return a;
}

// 1. Serre relations vanish and e3, z agree with their commutator forms.
inline CriterionResult criterion_1(const Options& o) {
    return detail::timed(1, "Presentation consistency", 1.0, [&](std::vector<Check>& out) {
        for (int m : detail::ms(o, {5, 6, 7, 8, 12})) {
            const auto& f = FieldContext::get(m);
            std::map<std::string, PbwElement> images{{"e1", pbw::gen(f, Gen::e1)}, {"e2", pbw::gen(f, Gen::e2)}};
            const PbwElement one = pbw::unit(f), zero(f);
            auto scale = [](const CycNum& c, const PbwElement& x) { return c * x; };
            for (const auto& rel : relations::serre(f)) {
                const PbwElement r = evaluate(rel.poly, images, one, zero, scale);
                out.push_back({detail::tag(m) + " " + rel.name, r.is_zero(), detail::residual_text(r)});
            }
            using structure::Named;
            const PbwElement d3 = structure::named(f, Named::e3_as_commutator) - pbw::gen(f, Gen::e3);
            const PbwElement dz = structure::named(f, Named::z_as_commutator) - pbw::gen(f, Gen::z);
            out.push_back({detail::tag(m) + " e3 = e1e2 - q^2 e2e1", d3.is_zero(), detail::residual_text(d3)});
            out.push_back({detail::tag(m) + " z = e2e3 - q^2 e3e2", dz.is_zero(), detail::residual_text(dz)});
        }
    });
}

// 2. The four commutation identities for 1 <= k <= 2l.
inline CriterionResult criterion_2(const Options& o) {
    return detail::timed(2, "Commutation identities", 5.0, [&](std::vector<Check>& out) {
        for (int m : detail::ms(o, {5, 6, 7, 8})) {
            const auto& f = FieldContext::get(m);
            for (int index = 1; index <= 4; ++index) {
                bool ok = true;
                std::string detail = "0";
                for (int k = index == 4 ? 2 : 1; k <= 2 * f.l(); ++k) {
                    const PbwElement r = pbw::commutation_identity(f, index, k);
                    if (!r.is_zero() && ok) {
                        ok = false;
                        detail = "k=" + std::to_string(k) + ": " + detail::residual_text(r);
                    }
                }
                out.push_back({detail::tag(m) + " identity " + std::to_string(index) + " for k<=2l", ok, detail});
            }
        }
    });
}

// 3. Central elements, B-central elements and negative controls.
inline CriterionResult criterion_3(const Options& o) {
    return detail::timed(3, "Central elements", 5.0, [&](std::vector<Check>& out) {
        for (int m : detail::ms(o, {5, 6, 8})) {
            const auto& f = FieldContext::get(m);
            const int l = f.l();
            const auto rep = structure::center_report(f);
            for (const char* key : {"e1^l", "e2^l", "e3^l", "z"})
                out.push_back({detail::tag(m) + " central " + key, rep.central.at(key), ""});
            for (const auto& [key, v] : rep.b_central) out.push_back({detail::tag(m) + " B-central " + key, v, ""});
            for (Gen g : {Gen::e1, Gen::e2}) {
                const bool central = pbw::is_central(pbw::power(pbw::gen(f, g), l - 1));
                out.push_back({detail::tag(m) + " " + gen_name(g) + "^(l-1) is not central", !central, ""});
            }
        }
    });
}

// 4. The two identities in B for 1 <= a <= 2l.
inline CriterionResult criterion_4(const Options& o) {
    return detail::timed(4, "Identities in B", 2.0, [&](std::vector<Check>& out) {
        for (int m : detail::ms(o, {5, 6})) {
            const auto& f = FieldContext::get(m);
            for (int index = 1; index <= 2; ++index) {
                bool ok = true;
                std::string detail = "0";
                for (int a = 1; a <= 2 * f.l(); ++a) {
                    const PbwElement r = structure::b_identities(f, index, a);
                    if (!r.is_zero() && ok) {
                        ok = false;
                        detail = "a=" + std::to_string(a) + ": " + detail::residual_text(r);
                    }
                }
                out.push_back({detail::tag(m) + " B identity " + std::to_string(index) + " for a<=2l", ok, detail});
            }
        }
    });
}

// 5. Images of the relations under the torus embedding.
inline CriterionResult criterion_5(const Options& o) {
    return detail::timed(5, "Torus embedding", 2.0, [&](std::vector<Check>& out) {
        for (int m : detail::ms(o, {5, 6, 7, 8, 12})) {
            const auto& f = FieldContext::get(m);
            const torus::QCommAlgebra t(f, torus::embedding_torus_skew(), true);
            const auto rep = torus::verify_embedding(t, torus::E2Image::printed);
            for (const auto& [name, r] : rep.residuals)
                out.push_back({detail::tag(m) + " image of " + name, r.is_zero(), r.to_string()});
            out.push_back({detail::tag(m) + " image of z' equals X2X4X1", rep.z_prime_matches,
                           "image: " + rep.z_prime_image.to_string(), false});
            const auto alt = torus::verify_embedding(t, torus::E2Image::corrected);
            out.push_back({detail::tag(m) + " with coefficient q^-4-1 in the e2 image, all relation images vanish",
                           alt.all_vanish(), "", false});
        }
    });
}

// 6. Invariant factors and PI degree.
inline CriterionResult criterion_6(const Options& o) {
    return detail::timed(6, "PI degree", 1.0, [&](std::vector<Check>& out) {
        const std::vector<long long> expected{2, 2, 0, 0};
        for (const char* name : {"uqb2", "balg"}) {
            const auto snf = lattice::smith_normal_form(lattice::builtin_matrix(name));
            std::string d;
            for (auto x : snf.diag) d += (d.empty() ? "" : ",") + std::to_string(x);
            out.push_back({std::string(name) + " invariant factors (2,2,0,0)", snf.diag == expected, d});
        }
        std::vector<int> range;
        for (int m = 5; m <= 16; ++m) range.push_back(m);
        for (int m : detail::ms(o, range)) {
            const int l = FieldContext::get(m).l();
            for (const char* name : {"uqb2", "balg"}) {
                const long long d = lattice::pi_degree(lattice::builtin_matrix(name), m);
                out.push_back({detail::tag(m) + " " + name + " pi_degree = l", d == l,
                               std::to_string(d) + " vs " + std::to_string(l)});
            }
        }
    });
}

// 7. Hilbert basis of the nonnegative central monomials of the affine space.
inline CriterionResult criterion_7(const Options& o) {
    return detail::timed(7, "Center of the quasipolynomial algebra", 5.0, [&](std::vector<Check>& out) {
        std::vector<long long> ls{3, 5};
        if (o.m) ls = {FieldContext::get(*o.m).l()};
        for (long long l : ls) {
            const auto basis = lattice::nonneg_hilbert_basis(lattice::affine_space_matrix(), l, l);
            const std::set<std::vector<long long>> expected{{l, 0, 0, 0}, {0, l, 0, 0}, {0, 0, l, 0}, {0, 0, 0, 1}, {1, 1, 1, 0}};
            std::string found;
            for (const auto& v : basis) {
                found += "(";
                for (std::size_t i = 0; i < v.size(); ++i) found += (i ? "," : "") + std::to_string(v[i]);
                found += ")";
            }
            out.push_back({"l=" + std::to_string(l) + " Hilbert basis", basis == expected, found});
        }
    });
}

// 8. z1 is central and its two forms agree; z' is measured and reported.
inline CriterionResult criterion_8(const Options& o) {
    return detail::timed(8, "Center generators", 2.0, [&](std::vector<Check>& out) {
        for (int m : detail::ms(o, {5, 6, 8, 12})) {
            const auto& f = FieldContext::get(m);
            using structure::Named;
            const PbwElement z1 = structure::named(f, Named::z_one);
            out.push_back({detail::tag(m) + " z1 central", pbw::is_central(z1), ""});
            const bool agree = z1 == structure::z_one_ordered_form(f);
            out.push_back({detail::tag(m) + " z1 forms agree", agree, ""});
            const auto w = pbw::centrality_witness(structure::named(f, Named::z_prime));
            std::string detail;
            if (w)
                detail = std::string("[z',") + gen_name(w->against) + "] has term (" + w->coeff.to_string() + ")*" +
                         expr::monomial_to_expr(w->monomial);
            out.push_back({detail::tag(m) + " z' central", !w, detail, false});
        }
    });
}

// 9. Relations, dimension and simplicity of every family.
inline CriterionResult criterion_9(const Options& o) {
    return detail::timed(9, "Module relation suites", 60.0, [&](std::vector<Check>& out) {
        std::mt19937 rng(2024);
        for (int m : detail::ms(o, {5, 6, 7, 8, 12})) {
            const auto& f = FieldContext::get(m);
            for (auto fam : repmod::all_families()) {
                const auto expected_dim = repmod::family_dim(f, fam);
                for (int s = 0; s < 5; ++s) {
                    const auto params = sample_params(f, fam, rng);
                    const auto rep = repmod::build(f, params);
                    const std::string id = detail::tag(m) + " " + repmod::family_name(fam) + " #" + std::to_string(s);
                    const auto res = repmod::verify_relations(rep);
                    std::string bad;
                    for (const auto& [name, r] : res.residuals)
                        if (!r.is_zero()) bad += (bad.empty() ? "" : ", ") + name;
                    out.push_back({id + " relations", res.all_zero(), bad.empty() ? "all zero" : "nonzero: " + bad});
                    out.push_back({id + " dim", rep.dim == expected_dim, std::to_string(rep.dim)});
                    const auto simple = repmod::is_simple(rep);
                    out.push_back({id + " simple", simple.simple && simple.certificate == rep.dim * rep.dim,
                                   "certificate " + std::to_string(simple.certificate)});
                    if (fam == repmod::Family::V1p) {
                        auto alt = params;
                        alt.variant = repmod::Variant::corrected;
                        const auto alt_res = repmod::verify_relations(repmod::build(f, alt));
                        out.push_back({id + " with e2 diagonal term scaled by q^2k, relations hold", alt_res.all_zero(), "",
                                       false});
                    }
                }
            }
        }
    });
}

// 10. Which l-th powers annihilate each type.
inline CriterionResult criterion_10(const Options& o) {
    return detail::timed(10, "Annihilation pattern", 5.0, [&](std::vector<Check>& out) {
        std::mt19937 rng(77);
        using repmod::Family;
        for (int m : detail::ms(o, {5, 8})) {
            const auto& f = FieldContext::get(m);
            for (Family fam : {Family::V1p, Family::V2p, Family::V3p, Family::V4p})
                for (int s = 0; s < 3; ++s) {
                    const auto rep = repmod::build(f, sample_params(f, fam, rng));
                    const auto cc = repmod::central_character(rep);
                    std::string flags;
                    for (const auto& [name, zero] : cc.annihilates)
                        flags += (flags.empty() ? "" : " ") + name + (zero ? "=0" : "!=0");
                    const std::string id = detail::tag(m) + " " + repmod::family_name(fam) + " #" + std::to_string(s);
                    out.push_back({id + " pattern", cc.pattern_ok, flags});
                    std::string non_scalar;
                    for (const auto& [name, v] : cc.scalars)
                        if (!v) non_scalar += (non_scalar.empty() ? "" : ", ") + name;
                    out.push_back({id + " central elements act by scalars", cc.all_scalar(),
                                   non_scalar.empty() ? "" : "not scalar: " + non_scalar, false});
                }
        }
    });
}

// 11. Parameter predicates against the intertwiner solver.
inline CriterionResult criterion_11(const Options& o) {
    return detail::timed(11, "Isomorphism classification", 120.0, [&](std::vector<Check>& out) {
        using repmod::Family;
        const int m = o.m.value_or(5);
        const auto& f = FieldContext::get(m);
        const int l = f.l();
        std::mt19937 rng(11);
        for (Family fam : {Family::V1p, Family::V2p, Family::V3p, Family::V4p}) {
            std::size_t agree = 0, total = 0;
            for (int s = 0; s < 52; ++s) {
                const auto b = sample_params(f, fam, rng);
                const int p = static_cast<int>(rng() % static_cast<unsigned>(l));
                const int twist = static_cast<int>(rng() % static_cast<unsigned>(l));
                repmod::ModuleParams a = b;
                std::string kind;
                if (s % 2 == 0) {
                    a = related_params(f, b, p, twist);
                    kind = "related p=" + std::to_string(p);
                } else if (s % 4 == 1) {
                    a = sample_params(f, fam, rng);
                    kind = "random";
                } else {
                    a = related_params(f, b, p, twist);
                    a.values.back() = a.values.back() + CycNum(f, 1L);
                    if (repmod::nonzero_mask(fam).back() && a.values.back().is_zero()) a.values.back() = CycNum(f, 3L);
                    kind = "perturbed p=" + std::to_string(p);
                }
                const auto pred = isoclass::iso_predicate(f, a, b);
                const auto solver = isoclass::iso_by_solver(repmod::build(f, a), repmod::build(f, b));
                const bool same = pred.isomorphic == solver.isomorphic;
                agree += same;
                ++total;
                out.push_back({detail::tag(m) + " " + repmod::family_name(fam) + " pair " + std::to_string(s) + " (" + kind +
                                   ")",
                               same,
                               std::string("predicate ") + (pred.isomorphic ? "true" : "false") + ", solver " +
                                   (solver.isomorphic ? "true" : "false")});
            }
            out.push_back({detail::tag(m) + " " + repmod::family_name(fam) + " agreement " + std::to_string(agree) + "/" +
                               std::to_string(total),
                           agree == total, "", false});
        }

        {
            std::size_t agree = 0;
            const std::size_t total = 52;
            for (std::size_t s = 0; s < total; ++s) {
                const auto b = sample_params(f, Family::V1p, rng, repmod::Variant::corrected);
                const int p = static_cast<int>(rng() % static_cast<unsigned>(l));
                auto a = s % 2 == 0 ? related_params(f, b, p, static_cast<int>(s)) : sample_params(f, Family::V1p, rng, repmod::Variant::corrected);
                const bool pred = isoclass::iso_predicate(f, a, b).isomorphic;
                agree += pred == isoclass::iso_by_solver(repmod::build(f, a), repmod::build(f, b)).isomorphic;
            }
            out.push_back({detail::tag(m) + " V1p with e2 diagonal scaled by q^2k: agreement " + std::to_string(agree) + "/" +
                               std::to_string(total),
                           agree == total, "", false});
        }

        // Explicit isomorphism v_k -> (alpha2/alpha1)^k v_{k+p} on V1p.
        for (auto variant : {repmod::Variant::printed, repmod::Variant::corrected}) {
            bool all = true;
            for (int s = 0; s < 5; ++s) {
                const auto b = sample_params(f, Family::V1p, rng, variant);
                const int p = 1 + s % (l - 1);
                const auto a = related_params(f, b, p, s);
                const auto phi = isoclass::explicit_v1_map(f, a, b, p);
                all = all && isoclass::intertwines(phi, repmod::build(f, a), repmod::build(f, b));
            }
            const bool printed = variant == repmod::Variant::printed;
            out.push_back({detail::tag(m) + (printed ? " explicit V1p map intertwines"
                                                     : " explicit V1p map intertwines (e2 diagonal scaled by q^2k)"),
                           all, "", printed});
        }
    });
}

// 12. Algebraic sanity properties.
inline CriterionResult criterion_12(const Options& o) {
    return detail::timed(12, "Property suite", 30.0, [&](std::vector<Check>& out) {
        const int m = o.m.value_or(5);
        const auto& f = FieldContext::get(m);
        std::mt19937 rng(99);
        auto random_element = [&](int max_degree) {
            PbwElement a(f);
            const int terms = 1 + static_cast<int>(rng() % 3);
            for (int t = 0; t < terms; ++t) {
                Monomial mono{};
                int budget = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
                int* slots[] = {&mono.i, &mono.j, &mono.k, &mono.n};
                while (budget-- > 0) ++*slots[rng() % 4];
                a.add_term(mono, sample_scalar(f, rng));
            }
            return a;
        };

        std::size_t assoc_ok = 0, confluence_ok = 0;
        const std::size_t triples = 200;
        for (std::size_t t = 0; t < triples; ++t) {
            const PbwElement a = random_element(4), b = random_element(4), c = random_element(4);
            assoc_ok += (a * b) * c == a * (b * c);
            if (t < 60) confluence_ok += a * b == word_rewrite::multiply(a, b);
        }
        out.push_back({detail::tag(m) + " associativity on 200 triples", assoc_ok == triples,
                       std::to_string(assoc_ok) + "/200"});
        out.push_back({detail::tag(m) + " PBW product equals word rewriting on 60 pairs", confluence_ok == 60,
                       std::to_string(confluence_ok) + "/60"});

        // Overlap ambiguities of the rewriting system resolve the same way.
        const PbwElement e1 = pbw::gen(f, Gen::e1), e2 = pbw::gen(f, Gen::e2), e3 = pbw::gen(f, Gen::e3);
        const PbwElement zz = pbw::gen(f, Gen::z);
        const std::vector<std::pair<std::string, std::vector<PbwElement>>> overlaps{
            {"e2 e1 e3", {e2, e1, e3}}, {"e2 e3 z", {e2, e3, zz}}, {"e2 e1 z", {e2, e1, zz}}, {"e1 e3 z", {e1, e3, zz}}};
        for (const auto& [name, w] : overlaps) {
            const PbwElement left = word_rewrite::multiply(word_rewrite::multiply(w[0], w[1]), w[2]);
            const PbwElement right = word_rewrite::multiply(w[0], word_rewrite::multiply(w[1], w[2]));
            out.push_back({detail::tag(m) + " overlap " + name + " resolves", left == right && left == w[0] * w[1] * w[2], ""});
        }

        std::size_t round_trip = 0;
        for (int t = 0; t < 50; ++t) {
            const PbwElement a = random_element(5);
            round_trip += expr::eval(f, expr::to_expr(a)) == a;
        }
        out.push_back({detail::tag(m) + " print/parse round trip on 50 elements", round_trip == 50,
                       std::to_string(round_trip) + "/50"});

        for (const char* name : {"uqb2", "balg", "qaspace"}) {
            const IntMatrix h = lattice::builtin_matrix(name);
            const auto snf = lattice::smith_normal_form(h);
            const bool rebuilt = lattice::multiply(lattice::multiply(snf.u, h), snf.v) == snf.d;
            const bool unimodular = std::llabs(lattice::determinant(snf.u)) == 1 && std::llabs(lattice::determinant(snf.v)) == 1;
            out.push_back({std::string(name) + " U H V = D with U, V unimodular", rebuilt && unimodular, ""});
        }
        std::uniform_int_distribution<long long> entry(-6, 6);
        std::size_t snf_ok = 0;
        for (int t = 0; t < 30; ++t) {
            IntMatrix h(4, std::vector<long long>(4, 0));
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j) {
                    h[i][j] = entry(rng);
                    h[j][i] = -h[i][j];
                }
            const auto snf = lattice::smith_normal_form(h);
            bool ok = lattice::multiply(lattice::multiply(snf.u, h), snf.v) == snf.d &&
                      std::llabs(lattice::determinant(snf.u)) == 1 && std::llabs(lattice::determinant(snf.v)) == 1;
            for (std::size_t i = 0; i + 1 < snf.diag.size(); ++i)
                if (snf.diag[i] != 0 && snf.diag[i + 1] % snf.diag[i] != 0) ok = false;
            snf_ok += ok;
        }
        out.push_back({"random antisymmetric 4x4 SNF reconstruction", snf_ok == 30, std::to_string(snf_ok) + "/30"});
    });
}

inline std::vector<std::function<CriterionResult(const Options&)>> all_criteria() {
    return {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,  criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12};
}

inline std::vector<CriterionResult> run_all(const Options& o) {
    std::vector<CriterionResult> out;
    for (const auto& c : all_criteria()) out.push_back(c(o));
    return out;
}

}  // namespace uqb2::conformance
