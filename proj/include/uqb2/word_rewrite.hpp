#pragma once

// Naive normal form by rewriting words letter pair by letter pair.  Shares
// no code with the PBW multiplication, so the two can be compared.

#include "cyclotomic.hpp"
#include "pbw.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace uqb2::word_rewrite {

// Letters in target order: z < e3 < e1 < e2.
enum Letter : char { Z = 0, E3 = 1, E1 = 2, E2 = 3 };

using Word = std::vector<char>;
using Poly = std::map<Word, CycNum>;

inline void add_to(Poly& p, const Word& w, const CycNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

/// Rewrites until every word is sorted, one inversion at a time.
inline Poly normalize(const FieldContext& f, Poly p) {
    auto q = [&](long long e) { return CycNum::q_pow(f, e); };
    Poly done;
    while (!p.empty()) {
        auto node = p.extract(p.begin());
        const Word& w = node.key();
        const CycNum& c = node.mapped();
        std::size_t at = 0;
        while (at + 1 < w.size() && w[at] <= w[at + 1]) ++at;
        if (at + 1 >= w.size()) {
            add_to(done, w, c);
            continue;
        }
        const char a = w[at], b = w[at + 1];
        auto splice = [&](std::vector<char> middle) {
            Word out(w.begin(), w.begin() + static_cast<long>(at));
            out.insert(out.end(), middle.begin(), middle.end());
            out.insert(out.end(), w.begin() + static_cast<long>(at) + 2, w.end());
            return out;
        };
        if (b == Z) {
            add_to(p, splice({Z, a}), c);
        } else if (a == E1 && b == E3) {
            add_to(p, splice({E3, E1}), c * q(-2));
        } else if (a == E2 && b == E3) {
            add_to(p, splice({E3, E2}), c * q(2));
            add_to(p, splice({Z}), c);
        } else if (a == E2 && b == E1) {
            add_to(p, splice({E1, E2}), c * q(-2));
            add_to(p, splice({E3}), -(c * q(-2)));
        } else {
            throw std::logic_error("word_rewrite: no rule for this pair");
        }
    }
    return done;
}

inline Word monomial_word(const Monomial& m) {
    Word w;
    w.insert(w.end(), static_cast<std::size_t>(m.i), Z);
    w.insert(w.end(), static_cast<std::size_t>(m.j), E3);
    w.insert(w.end(), static_cast<std::size_t>(m.k), E1);
    w.insert(w.end(), static_cast<std::size_t>(m.n), E2);
    return w;
}

inline Poly from_pbw(const PbwElement& a) {
    Poly out;
    for (const auto& [m, c] : a.terms()) add_to(out, monomial_word(m), c);
    return out;
}

/// Sorted words back to PBW elements.
inline PbwElement to_pbw(const FieldContext& f, const Poly& p) {
    PbwElement out(f);
    for (const auto& [w, c] : p) {
        Monomial m{};
        for (char x : w) {
            switch (x) {
            case Z: ++m.i; break;
            case E3: ++m.j; break;
            case E1: ++m.k; break;
            case E2: ++m.n; break;
            }
        }
        out.add_term(m, c);
    }
    return out;
}

/// Product computed by concatenating words and rewriting.
inline PbwElement multiply(const PbwElement& a, const PbwElement& b) {
    const FieldContext& f = a.field();
    Poly prod;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Word w = monomial_word(ma);
            const Word wb = monomial_word(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            add_to(prod, w, ca * cb);
        }
    return to_pbw(f, normalize(f, std::move(prod)));
}

}  // namespace uqb2::word_rewrite
