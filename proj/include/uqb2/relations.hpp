#pragma once

// Defining relations written as noncommutative polynomials in generator
// words, so they can be evaluated in any target algebra (PBW elements,
// quantum torus elements, action matrices).

#include "cyclotomic.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uqb2 {

/// A word is read left to right as a product of named generators.
using Word = std::vector<std::string>;

struct WordPoly {
    std::vector<std::pair<CycNum, Word>> terms;

    WordPoly& add(const CycNum& c, Word w) {
        terms.emplace_back(c, std::move(w));
        return *this;
    }
};

struct Relation {
    std::string name;
    WordPoly poly;  // the relation reads poly = 0
};

/// Evaluates a word polynomial given images of the generators.  `one` is the
/// image of the empty word; T needs +, binary * and scaling by CycNum.
template <class T, class Scale>
T evaluate(const WordPoly& p, const std::map<std::string, T>& images, const T& one, const T& zero, Scale&& scale) {
    T acc = zero;
    for (const auto& [c, word] : p.terms) {
        T prod = one;
        for (const auto& g : word) {
            auto it = images.find(g);
            if (it == images.end()) throw std::invalid_argument("evaluate: no image for generator " + g);
            prod = prod * it->second;
        }
        acc = acc + scale(c, prod);
    }
    return acc;
}

namespace relations {

/// The two quantum Serre relations in e1, e2.
inline std::vector<Relation> serre(const FieldContext& f) {
    auto q = [&](long long e) { return CycNum::q_pow(f, e); };
    const CycNum one(f, 1L);
    Relation s1{"serre_1", {}};
    s1.poly.add(one, {"e1", "e1", "e2"}).add(-(q(2) + q(-2)), {"e1", "e2", "e1"}).add(one, {"e2", "e1", "e1"});
    const CycNum c = q(2) + one + q(-2);
    Relation s2{"serre_2", {}};
    s2.poly.add(one, {"e2", "e2", "e2", "e1"})
        .add(-c, {"e2", "e2", "e1", "e2"})
        .add(c, {"e2", "e1", "e2", "e2"})
        .add(-one, {"e1", "e2", "e2", "e2"});
    return {s1, s2};
}

/// The four-generator presentation on e1, e2, e3, z.
inline std::vector<Relation> presentation(const FieldContext& f) {
    auto q = [&](long long e) { return CycNum::q_pow(f, e); };
    const CycNum one(f, 1L);
    std::vector<Relation> out;
    for (const char* g : {"e1", "e2", "e3"}) {
        Relation r{std::string(g) + "z=z" + g, {}};
        r.poly.add(one, {g, "z"}).add(-one, {"z", g});
        out.push_back(std::move(r));
    }
    Relation r13{"e1e3=q^-2e3e1", {}};
    r13.poly.add(one, {"e1", "e3"}).add(-q(-2), {"e3", "e1"});
    Relation r23{"e2e3=q^2e3e2+z", {}};
    r23.poly.add(one, {"e2", "e3"}).add(-q(2), {"e3", "e2"}).add(-one, {"z"});
    Relation r21{"e2e1=q^-2e1e2-q^-2e3", {}};
    r21.poly.add(one, {"e2", "e1"}).add(-q(-2), {"e1", "e2"}).add(q(-2), {"e3"});
    out.push_back(std::move(r13));
    out.push_back(std::move(r23));
    out.push_back(std::move(r21));
    return out;
}

/// Presentation relations followed by the Serre relations.
inline std::vector<Relation> full(const FieldContext& f) {
    auto out = presentation(f);
    for (auto& r : serre(f)) out.push_back(std::move(r));
    return out;
}

/// Relations of the subalgebra B on e1, e3, z, zt (zt = z-tilde).
inline std::vector<Relation> b_algebra(const FieldContext& f) {
    auto q = [&](long long e) { return CycNum::q_pow(f, e); };
    const CycNum one(f, 1L);
    std::vector<Relation> out;
    auto rel = [&](std::string name) -> WordPoly& {
        out.push_back({std::move(name), {}});
        return out.back().poly;
    };
    rel("e1e3=q^-2e3e1").add(one, {"e1", "e3"}).add(-q(-2), {"e3", "e1"});
    rel("e1z=ze1").add(one, {"e1", "z"}).add(-one, {"z", "e1"});
    rel("e3z=ze3").add(one, {"e3", "z"}).add(-one, {"z", "e3"});
    rel("ztz=zzt").add(one, {"zt", "z"}).add(-one, {"z", "zt"});
    rel("zte3=q^2e3zt").add(one, {"zt", "e3"}).add(-q(2), {"e3", "zt"});
    rel("zte1=e1zt-e3^2").add(one, {"zt", "e1"}).add(-one, {"e1", "zt"}).add(one, {"e3", "e3"});
    return out;
}

}  // namespace relations
}  // namespace uqb2
