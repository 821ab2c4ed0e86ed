// Command-line front end.  Every subcommand prints one JSON document on
// stdout.  Exit codes: 0 ok, 1 a verification failed, 2 usage or parse error.

#include "uqb2/uqb2.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::ordered_json;
using namespace uqb2;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ordered_json coeff_json(const CycNum& c) { return c.coeff_strings(); }

ordered_json monomial_json(const Monomial& m) { return {{"i", m.i}, {"j", m.j}, {"k", m.k}, {"n", m.n}}; }

ordered_json element_json(const PbwElement& a) {
    ordered_json terms = ordered_json::array();
    for (const auto& [mono, c] : a.terms()) {
        ordered_json t = monomial_json(mono);
        t["coeff"] = coeff_json(c);
        t["coeff_text"] = c.to_string();
        terms.push_back(std::move(t));
    }
    return terms;
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json int_matrix_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : m) rows.push_back(r);
    return rows;
}

const FieldContext& field_for(int m) {
    try {
        return FieldContext::get(m);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
}

/// Splits on commas outside parentheses.
std::vector<std::string> split_params(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

repmod::ModuleParams parse_params(const FieldContext& f, const std::string& family, const std::string& params,
                                  const std::string& variant) {
    repmod::ModuleParams p{repmod::parse_family(family), {}, repmod::Variant::printed};
    if (variant == "corrected")
        p.variant = repmod::Variant::corrected;
    else if (variant != "printed")
        throw UsageError("--variant must be printed or corrected");
    for (const auto& piece : split_params(params)) p.values.push_back(expr::eval_scalar(f, piece));
    repmod::validate(p);
    return p;
}

IntMatrix read_matrix(const std::string& name_or_file) {
    if (name_or_file == "uqb2" || name_or_file == "balg" || name_or_file == "qaspace")
        return lattice::builtin_matrix(name_or_file);
    std::ifstream in(name_or_file);
    if (!in) throw UsageError("unknown matrix name and no such file: " + name_or_file);
    IntMatrix h;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<long long> r;
        std::string tok;
        while (row >> tok) {
            try {
                std::size_t used = 0;
                r.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw UsageError("matrix file: not an integer: " + tok);
            }
        }
        if (!r.empty()) h.push_back(std::move(r));
    }
    for (const auto& r : h)
        if (r.size() != h.size()) throw UsageError("matrix file: grid must be square");
    if (h.empty()) throw UsageError("matrix file: empty");
    return h;
}

ordered_json witness_json(const std::optional<pbw::CentralityWitness>& w) {
    if (!w) return nullptr;
    ordered_json j = {{"against", gen_name(w->against)}, {"monomial", monomial_json(w->monomial)}};
    j["coeff"] = coeff_json(w->coeff);
    j["coeff_text"] = w->coeff.to_string();
    return j;
}

int emit(const ordered_json& j, int code) {
    std::cout << j.dump(2) << "\n";
    return code;
}

// Subcommand bodies.

int cmd_nf(int m, const std::string& src) {
    const auto& f = field_for(m);
    const PbwElement a = expr::eval(f, src);
    return emit({{"m", m}, {"terms", element_json(a)}, {"text", expr::to_expr(a)}}, kOk);
}

int cmd_central(int m, const std::string& src) {
    const auto& f = field_for(m);
    const auto w = pbw::centrality_witness(expr::eval(f, src));
    return emit({{"m", m}, {"central", !w}, {"witness", witness_json(w)}}, kOk);
}

int cmd_pideg(int m, const std::string& matrix) {
    const IntMatrix h = read_matrix(matrix);
    if (!lattice::is_antisymmetric(h)) throw UsageError("matrix must be antisymmetric");
    const auto snf = lattice::smith_normal_form(h);
    ordered_json j = {{"m", m}, {"matrix", int_matrix_json(h)}, {"invariant_factors", snf.diag}};
    try {
        j["pi_degree"] = lattice::pi_degree(h, m);
    } catch (const std::logic_error& e) {
        std::cerr << "pideg: " << e.what() << "\n";
        j["pi_degree"] = nullptr;
        return emit(j, kCheckFailed);
    }
    return emit(j, kOk);
}

ordered_json params_json(const repmod::ModuleParams& p) {
    ordered_json vals = ordered_json::array();
    for (const auto& v : p.values) vals.push_back(v.to_string());
    return {{"family", repmod::family_name(p.family)},
            {"variant", p.variant == repmod::Variant::printed ? "printed" : "corrected"},
            {"values", vals}};
}

int cmd_build(int m, const repmod::ModuleParams& p) {
    const auto& f = field_for(m);
    const auto rep = repmod::build(f, p);
    ordered_json mats = ordered_json::object();
    for (const auto& g : rep.generators) mats[g] = matrix_json(rep[g]);
    return emit({{"m", m}, {"params", params_json(p)}, {"dim", rep.dim}, {"generators", rep.generators}, {"act", mats}},
                kOk);
}

int cmd_check(int m, const repmod::ModuleParams& p) {
    const auto& f = field_for(m);
    const auto rep = repmod::build(f, p);
    const auto res = repmod::verify_relations(rep);
    ordered_json rels = ordered_json::array();
    for (const auto& [name, r] : res.residuals) {
        ordered_json entry = {{"relation", name}, {"zero", r.is_zero()}};
        if (!r.is_zero()) entry["residual"] = matrix_json(r);
        rels.push_back(std::move(entry));
    }
    ordered_json j = {{"m", m}, {"params", params_json(p)}, {"dim", rep.dim}, {"relations", rels}, {"all_zero", res.all_zero()}};
    if (!repmod::is_b_family(p.family) && p.family != repmod::Family::V4p)
        j["correspondence_holds"] = repmod::correspondence_holds(f, p);
    return emit(j, res.all_zero() ? kOk : kCheckFailed);
}

int cmd_simple(int m, const repmod::ModuleParams& p) {
    const auto& f = field_for(m);
    const auto rep = repmod::build(f, p);
    const auto s = repmod::is_simple(rep);
    return emit({{"m", m}, {"params", params_json(p)}, {"dim", rep.dim}, {"simple", s.simple}, {"certificate", s.certificate}},
                kOk);
}

int cmd_character(int m, const repmod::ModuleParams& p) {
    const auto& f = field_for(m);
    const auto cc = repmod::central_character(repmod::build(f, p));
    ordered_json scalars = ordered_json::object();
    for (const auto& [name, v] : cc.scalars) scalars[name] = v ? ordered_json(v->to_string()) : ordered_json(nullptr);
    ordered_json ann = ordered_json::object();
    for (const auto& [name, v] : cc.annihilates) ann[name] = v;
    return emit({{"m", m},
                 {"params", params_json(p)},
                 {"scalars", scalars},
                 {"all_scalar", cc.all_scalar()},
                 {"annihilates", ann},
                 {"pattern_ok", cc.pattern_ok}},
                cc.all_scalar() ? kOk : kCheckFailed);
}

int cmd_iso(int m, const repmod::ModuleParams& a, const repmod::ModuleParams& b) {
    const auto& f = field_for(m);
    const auto pred = isoclass::iso_predicate(f, a, b);
    ordered_json j = {{"m", m}, {"params1", params_json(a)}, {"params2", params_json(b)}};
    j["isomorphic"] = pred.isomorphic;
    j["witness_p"] = pred.witness_p ? ordered_json(*pred.witness_p) : ordered_json(nullptr);
    const auto r1 = repmod::build(f, a), r2 = repmod::build(f, b);
    const auto t = isoclass::find_intertwiner(r1, r2);
    j["solver"] = {{"isomorphic", t.has_value()}, {"intertwiner", t ? matrix_json(*t) : ordered_json(nullptr)}};
    j["agree"] = pred.isomorphic == t.has_value();
    return emit(j, kOk);
}

int cmd_center_report(int m) {
    const auto& f = field_for(m);
    const auto r = structure::center_report(f);
    ordered_json j = {{"m", r.m}, {"l", r.l}};
    j["central"] = r.central;
    j["b_central"] = r.b_central;
    j["z1_forms_agree"] = r.z_one_forms_agree;
    j["z_prime_central"] = r.z_prime_central;
    j["z_prime_witness"] = witness_json(r.z_prime_witness);
    j["z_prime"] = expr::to_expr(structure::named(f, structure::Named::z_prime));
    j["ok"] = r.contracted_ok();
    return emit(j, r.contracted_ok() ? kOk : kCheckFailed);
}

int cmd_torus_check(int m, const std::string& variant) {
    const auto& f = field_for(m);
    torus::E2Image v;
    if (variant == "printed")
        v = torus::E2Image::printed;
    else if (variant == "corrected")
        v = torus::E2Image::corrected;
    else
        throw UsageError("--variant must be printed or corrected");
    const torus::QCommAlgebra t(f, torus::embedding_torus_skew(), true);
    const auto rep = torus::verify_embedding(t, v);
    ordered_json res = ordered_json::array();
    for (const auto& [name, r] : rep.residuals)
        res.push_back({{"relation", name}, {"zero", r.is_zero()}, {"image", r.to_string()}});
    ordered_json j = {{"m", m}, {"variant", variant}, {"relations", res}, {"all_vanish", rep.all_vanish()}};
    j["z_prime_image"] = rep.z_prime_image.to_string();
    j["x2x4x1"] = rep.x2x4x1.to_string();
    j["z_prime_matches"] = rep.z_prime_matches;
    return emit(j, rep.all_vanish() ? kOk : kCheckFailed);
}

int cmd_conformance(std::optional<int> m) {
    conformance::Options o;
    if (m) {
        field_for(*m);
        o.m = m;
    }
    ordered_json crits = ordered_json::array();
    bool all = true;
    for (const auto& r : conformance::run_all(o)) {
        ordered_json checks = ordered_json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"ok", c.ok}, {"contracted", c.contracted}, {"detail", c.detail}});
        crits.push_back({{"id", r.id},
                         {"title", r.title},
                         {"passed", r.passed()},
                         {"seconds", r.seconds},
                         {"budget_seconds", r.budget_seconds},
                         {"failures", r.failures()},
                         {"checks", checks}});
        all = all && r.passed();
    }
    ordered_json j = {{"m", m ? ordered_json(*m) : ordered_json(nullptr)}, {"passed", all}, {"criteria", crits}};
    return emit(j, all ? kOk : kCheckFailed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in U_q^+(B_2) at roots of unity"};
    app.require_subcommand(1);

    int m = 5;
    std::string expression, matrix, family, params, params1, params2, variant = "printed";
    std::optional<int> conf_m;

    auto add_m = [&](CLI::App* sub) { sub->add_option("--m", m, "order of the root of unity q (>= 5)")->required(); };
    auto add_module = [&](CLI::App* sub) {
        add_m(sub);
        sub->add_option("--family", family, "V1, V2, V3, V1p, V2p, V3p or V4p")->required();
        sub->add_option("--params", params, "comma-separated scalar expressions")->required();
        sub->add_option("--variant", variant, "printed (default) or corrected e2 action on V1p");
    };

    auto* nf = app.add_subcommand("nf", "PBW normal form of an expression");
    add_m(nf);
    nf->add_option("expr", expression)->required();
    auto* central = app.add_subcommand("central", "test whether an expression is central");
    add_m(central);
    central->add_option("expr", expression)->required();
    auto* pideg = app.add_subcommand("pideg", "invariant factors and PI degree of a q-commutation matrix");
    add_m(pideg);
    pideg->add_option("--matrix", matrix, "uqb2, balg, qaspace or a file with an integer grid")->required();
    auto* build = app.add_subcommand("build-module", "action matrices of a module");
    add_module(build);
    auto* check = app.add_subcommand("check-module", "relation residuals of a module");
    add_module(check);
    auto* simple = app.add_subcommand("simple", "simplicity by the dimension of the generated algebra");
    add_module(simple);
    auto* character = app.add_subcommand("character", "scalars by which central elements act");
    add_module(character);
    auto* iso = app.add_subcommand("iso", "isomorphism test between two members of a family");
    add_m(iso);
    iso->add_option("--family", family)->required();
    iso->add_option("--params1", params1)->required();
    iso->add_option("--params2", params2)->required();
    iso->add_option("--variant", variant, "printed (default) or corrected e2 action on V1p");
    auto* center = app.add_subcommand("center-report", "central elements and their checks");
    add_m(center);
    auto* torus_check = app.add_subcommand("torus-check", "relation images under the torus embedding");
    add_m(torus_check);
    torus_check->add_option("--variant", variant, "printed (default) or corrected e2 image");
    auto* conf = app.add_subcommand("conformance", "run the acceptance suite");
    conf->add_option("--m", conf_m, "restrict to one root of unity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*nf) return cmd_nf(m, expression);
        if (*central) return cmd_central(m, expression);
        if (*pideg) return cmd_pideg(m, matrix);
        if (*iso) {
            const auto& f = field_for(m);
            return cmd_iso(m, parse_params(f, family, params1, variant), parse_params(f, family, params2, variant));
        }
        if (*center) return cmd_center_report(m);
        if (*torus_check) return cmd_torus_check(m, variant);
        if (*conf) return cmd_conformance(conf_m);
        for (auto* sub : {build, check, simple, character}) {
            if (!*sub) continue;
            const auto p = parse_params(field_for(m), family, params, variant);
            if (sub == build) return cmd_build(m, p);
            if (sub == check) return cmd_check(m, p);
            if (sub == simple) return cmd_simple(m, p);
            return cmd_character(m, p);
        }
    } catch (const expr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const expr::EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    std::cerr << "error: no subcommand\n";
    return kUsage;
}
