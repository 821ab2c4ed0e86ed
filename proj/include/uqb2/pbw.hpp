#pragma once

// PBW normal forms for U_q^+(B_2) on the generators e1, e2, e3, z.
//
// Basis monomials are z^i e3^j e1^k e2^n.  Products are reduced with the
// defining relations only:
//
//     e_i z = z e_i,   e1 e3 = q^-2 e3 e1,
//     e2 e3 = q^2 e3 e2 + z,   e2 e1 = q^-2 e1 e2 - q^-2 e3.
//
// The only out-of-order pairs inside a product of two normal monomials are
// e2^n e3^j and e2^n e1^k (plus the trivial q-swap e1^k e3^j); both are
// memoised per field.

#include "cyclotomic.hpp"

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace uqb2 {

enum class Gen { e1, e2, e3, z };

inline const char* gen_name(Gen g) {
    switch (g) {
    case Gen::e1: return "e1";
    case Gen::e2: return "e2";
    case Gen::e3: return "e3";
    case Gen::z: return "z";
    }
    return "?";
}

/// Exponents of z^i e3^j e1^k e2^n.  The defaulted ordering is
/// lexicographic on (i, j, k, n).
struct Monomial {
    int i = 0;  // z
    int j = 0;  // e3
    int k = 0;  // e1
    int n = 0;  // e2

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    int degree() const noexcept { return i + j + k + n; }
    bool is_unit() const noexcept { return degree() == 0; }
};

class PbwElement {
public:
    using Terms = std::map<Monomial, CycNum>;

    explicit PbwElement(const FieldContext& f) : field_(&f) {}
    PbwElement(const FieldContext& f, const Monomial& mono, const CycNum& c) : field_(&f) { add_term(mono, c); }

    static PbwElement unit(const FieldContext& f) { return {f, Monomial{}, CycNum(f, 1L)}; }
    static PbwElement scalar(const CycNum& c) { return {c.field(), Monomial{}, c}; }
    static PbwElement generator(const FieldContext& f, Gen g) {
        Monomial mono;
        switch (g) {
        case Gen::z: mono.i = 1; break;
        case Gen::e3: mono.j = 1; break;
        case Gen::e1: mono.k = 1; break;
        case Gen::e2: mono.n = 1; break;
        }
        return {f, mono, CycNum(f, 1L)};
    }

    const FieldContext& field() const noexcept { return *field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Coefficient of a basis monomial (zero if absent).
    CycNum coeff(const Monomial& mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? CycNum(*field_) : it->second;
    }

    /// True iff the element lies in the span of the unit monomial.
    bool is_scalar() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }
    CycNum scalar_value() const { return coeff(Monomial{}); }

    void add_term(const Monomial& mono, const CycNum& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    PbwElement& operator+=(const PbwElement& o) {
        check_same(o);
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    PbwElement& operator-=(const PbwElement& o) {
        check_same(o);
        for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
    friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
    friend PbwElement operator-(const PbwElement& a) { return a * CycNum(a.field(), -1L); }

    friend PbwElement operator*(const PbwElement& a, const CycNum& c) {
        PbwElement out(*a.field_);
        if (c.is_zero()) return out;
        for (const auto& [mono, x] : a.terms_) out.terms_.emplace(mono, x * c);
        return out;
    }
    friend PbwElement operator*(const CycNum& c, const PbwElement& a) { return a * c; }

    friend PbwElement operator*(const PbwElement& a, const PbwElement& b);

    friend bool operator==(const PbwElement& a, const PbwElement& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

private:
    void check_same(const PbwElement& o) const {
        if (field_ != o.field_) throw std::invalid_argument("PbwElement: operands from different fields");
    }

    const FieldContext* field_;
    Terms terms_;
};

/// Multiplication engine for one field.  Shared per field through `get`;
/// the memo tables are guarded by a mutex, entries are computed outside the
/// lock and are deterministic, so concurrent callers agree.
class PbwAlgebra {
public:
    static const PbwAlgebra& get(const FieldContext& f) {
        static std::mutex mutex;
        static std::map<const FieldContext*, std::unique_ptr<PbwAlgebra>> registry;
        std::lock_guard lock(mutex);
        auto& slot = registry[&f];
        if (!slot) slot.reset(new PbwAlgebra(f));
        return *slot;
    }

    const FieldContext& field() const noexcept { return *field_; }

    PbwElement mul(const PbwElement& a, const PbwElement& b) const {
        PbwElement out(*field_);
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) mul_monomials_into(out, ma, mb, ca * cb);
        return out;
    }

    PbwElement power(const PbwElement& a, int e) const {
        if (e < 0) throw std::domain_error("power: negative exponent");
        PbwElement result = PbwElement::unit(*field_);
        PbwElement base = a;
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            e >>= 1;
            if (e) base = mul(base, base);
        }
        return result;
    }

    /// Normal form of e2^n e3^j (only z, e3, e2 occur).
    const PbwElement& e2_pow_e3_pow(int n, int j) const { return cached(e23_, n, j, [&] { return compute_e23(n, j); }); }
    /// Normal form of e2^n e1^k.
    const PbwElement& e2_pow_e1_pow(int n, int k) const { return cached(e21_, n, k, [&] { return compute_e21(n, k); }); }

private:
    explicit PbwAlgebra(const FieldContext& f) : field_(&f) {}

    using Memo = std::map<std::pair<int, int>, std::shared_ptr<const PbwElement>>;

    template <class Fn>
    const PbwElement& cached(Memo& memo, int a, int b, Fn&& compute) const {
        {
            std::lock_guard lock(memo_mutex_);
            if (auto it = memo.find({a, b}); it != memo.end()) return *it->second;
        }
        auto value = std::make_shared<const PbwElement>(compute());
        std::lock_guard lock(memo_mutex_);
        auto [it, _] = memo.try_emplace({a, b}, std::move(value));
        return *it->second;
    }

    CycNum q(long long k) const { return CycNum::q_pow(*field_, k); }

    // z^i e3^j e1^k * (normal term) -- only e1^k has to pass e3^b.
    static Monomial shift_left(const Monomial& left, const Monomial& t) {
        return {left.i + t.i, left.j + t.j, left.k + t.k, t.n};
    }

    // Right-multiply a normal form by a single generator.
    PbwElement times_gen(const PbwElement& a, Gen g) const {
        PbwElement out(*field_);
        for (const auto& [mono, c] : a.terms()) {
            switch (g) {
            case Gen::z: out.add_term({mono.i + 1, mono.j, mono.k, mono.n}, c); break;
            case Gen::e2: out.add_term({mono.i, mono.j, mono.k, mono.n + 1}, c); break;
            case Gen::e3:
            case Gen::e1: {
                if (mono.n == 0) {
                    if (g == Gen::e1) {
                        out.add_term({mono.i, mono.j, mono.k + 1, 0}, c);
                    } else {
                        // e1^k e3 = q^{-2k} e3 e1^k
                        out.add_term({mono.i, mono.j + 1, mono.k, 0}, c * q(-2LL * mono.k));
                    }
                    break;
                }
                const PbwElement& tail = g == Gen::e1 ? e2_pow_e1_pow(mono.n, 1) : e2_pow_e3_pow(mono.n, 1);
                for (const auto& [t, ct] : tail.terms())
                    out.add_term(shift_left(mono, t), c * ct * q(-2LL * mono.k * t.j));
                break;
            }
            }
        }
        return out;
    }

    // e2^n e3 = q^2 (e2^{n-1} e3) e2 + z e2^{n-1};  e2^n e3^j = (e2^n e3^{j-1}) e3.
    PbwElement compute_e23(int n, int j) const {
        const FieldContext& f = *field_;
        if (n == 0 || j == 0) return PbwElement(f, {0, j, 0, n}, CycNum(f, 1L));
        if (j == 1) {
            PbwElement out = times_gen(e2_pow_e3_pow(n - 1, 1), Gen::e2) * q(2);
            out.add_term({1, 0, 0, n - 1}, CycNum(f, 1L));
            return out;
        }
        return times_gen(e2_pow_e3_pow(n, j - 1), Gen::e3);
    }

    // e2^n e1 = q^-2 (e2^{n-1} e1) e2 - q^-2 e2^{n-1} e3;  e2^n e1^k = (e2^n e1^{k-1}) e1.
    PbwElement compute_e21(int n, int k) const {
        const FieldContext& f = *field_;
        if (n == 0 || k == 0) return PbwElement(f, {0, 0, k, n}, CycNum(f, 1L));
        if (k == 1) {
            PbwElement out = times_gen(e2_pow_e1_pow(n - 1, 1), Gen::e2) * q(-2);
            out -= e2_pow_e3_pow(n - 1, 1) * q(-2);
            return out;
        }
        return times_gen(e2_pow_e1_pow(n, k - 1), Gen::e1);
    }

    // (z^i e3^j e1^k e2^n)(z^i' e3^j' e1^k' e2^n')
    //   = z^{i+i'} e3^j e1^k [e2^n e3^j'] e1^k' e2^n'.
    void mul_monomials_into(PbwElement& out, const Monomial& a, const Monomial& b, const CycNum& c) const {
        if (a.n == 0) {
            // e1^k e3^j' = q^{-2 k j'} e3^j' e1^k
            out.add_term({a.i + b.i, a.j + b.j, a.k + b.k, b.n}, c * q(-2LL * a.k * b.j));
            return;
        }
        const PbwElement& left = e2_pow_e3_pow(a.n, b.j);
        for (const auto& [t1, c1] : left.terms()) {
            // t1 = z^a e3^b e2^d; the block e2^d e1^k' is normal-ordered next.
            const PbwElement& mid = e2_pow_e1_pow(t1.n, b.k);
            for (const auto& [t2, c2] : mid.terms()) {
                const int e3_total = t1.j + t2.j;
                Monomial r{a.i + b.i + t1.i + t2.i, a.j + e3_total, a.k + t2.k, t2.n + b.n};
                out.add_term(r, c * c1 * c2 * q(-2LL * a.k * e3_total));
            }
        }
    }

    const FieldContext* field_;
    mutable std::mutex memo_mutex_;
    mutable Memo e23_;
    mutable Memo e21_;
};

inline PbwElement operator*(const PbwElement& a, const PbwElement& b) {
    a.check_same(b);
    return PbwAlgebra::get(a.field()).mul(a, b);
}

namespace pbw {

inline PbwElement gen(const FieldContext& f, Gen g) { return PbwElement::generator(f, g); }
inline PbwElement unit(const FieldContext& f) { return PbwElement::unit(f); }
inline PbwElement power(const PbwElement& a, int e) { return PbwAlgebra::get(a.field()).power(a, e); }
inline PbwElement commutator(const PbwElement& a, const PbwElement& b) { return a * b - b * a; }

struct CentralityWitness {
    Gen against;
    Monomial monomial;
    CycNum coeff;
};

/// First nonzero commutator term against e1 then e2, or nullopt if central.
/// e1 and e2 generate the algebra, so checking both suffices.
inline std::optional<CentralityWitness> centrality_witness(const PbwElement& a) {
    for (Gen g : {Gen::e1, Gen::e2}) {
        PbwElement c = commutator(a, gen(a.field(), g));
        if (!c.is_zero()) {
            const auto& [mono, coeff] = *c.terms().begin();
            return CentralityWitness{g, mono, coeff};
        }
    }
    return std::nullopt;
}

inline bool is_central(const PbwElement& a) { return !centrality_witness(a).has_value(); }

/// Graded order used for leading terms: total degree first, then the
/// exponent tuple read in generator order e1 < e2 < e3 < z.
inline auto graded_key(const Monomial& mono) { return std::tuple(mono.degree(), mono.k, mono.n, mono.j, mono.i); }

inline bool graded_less(const Monomial& a, const Monomial& b) { return graded_key(a) < graded_key(b); }

inline std::optional<std::pair<Monomial, CycNum>> leading_term(const PbwElement& a) {
    std::optional<std::pair<Monomial, CycNum>> best;
    for (const auto& [mono, c] : a.terms())
        if (!best || graded_less(best->first, mono)) best.emplace(mono, c);
    return best;
}

/// LHS - RHS of the commutation identities
///   1. e2 e3^k = q^{2k} e3^k e2 + [k]_{q^2} z e3^{k-1}
///   2. e2^k e3 = q^{2k} e3 e2^k + [k]_{q^2} z e2^{k-1}
///   3. e2 e1^k = q^{-2k} e1^k e2 - q^{-2} [k]_{q^-4} e3 e1^{k-1}
///   4. e2^k e1 = q^{-2k} e1 e2^k - q^{-2} (q^{2k}-q^{-2k})/(q^2-q^{-2}) e3 e2^{k-1}
///               - q^{-2(k-1)} (q^{2k}-1)(q^{2(k-1)}-1)/((q^4-1)(q^2-1)) z e2^{k-2}   (k >= 2)
/// with the right-hand sides written directly as PBW monomials.
inline PbwElement commutation_identity(const FieldContext& f, int index, int k) {
    if (k < 1) throw std::domain_error("commutation_identity: k must be >= 1");
    if (index == 4 && k < 2) throw std::domain_error("commutation_identity: item 4 needs k >= 2");
    auto q = [&](long long e) { return CycNum::q_pow(f, e); };
    const CycNum one(f, 1L);
    const PbwElement e1 = gen(f, Gen::e1), e2 = gen(f, Gen::e2), e3 = gen(f, Gen::e3);
    auto mono = [&](int i, int j, int kk, int n, const CycNum& c) { return PbwElement(f, {i, j, kk, n}, c); };

    switch (index) {
    case 1:
        return e2 * power(e3, k) - mono(0, k, 0, 1, q(2LL * k)) - mono(1, k - 1, 0, 0, q_bracket(f, k, 2));
    case 2:
        return power(e2, k) * e3 - mono(0, 1, 0, k, q(2LL * k)) - mono(1, 0, 0, k - 1, q_bracket(f, k, 2));
    case 3:
        return e2 * power(e1, k) - mono(0, 0, k, 1, q(-2LL * k)) + mono(0, 1, k - 1, 0, q(-2) * q_bracket(f, k, -4));
    case 4: {
        const CycNum c3 = q(-2) * (q(2LL * k) - q(-2LL * k)) / (q(2) - q(-2));
        const CycNum cz = q(-2LL * (k - 1)) * (q(2LL * k) - one) * (q(2LL * (k - 1)) - one) / ((q(4) - one) * (q(2) - one));
        return power(e2, k) * e1 - mono(0, 0, 1, k, q(-2LL * k)) + mono(0, 1, 0, k - 1, c3) + mono(1, 0, 0, k - 2, cz);
    }
    default:
        throw std::domain_error("commutation_identity: index must be 1..4");
    }
}

}  // namespace pbw
}  // namespace uqb2
