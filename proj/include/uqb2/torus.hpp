#pragma once

// Quantum tori and quantum affine spaces with an integer q-commutation
// matrix, and the embedding of U_q^+(B_2) into the rank-4 torus.

#include "cyclotomic.hpp"
#include "lattice.hpp"
#include "relations.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uqb2::torus {

using Exponents = std::vector<int>;

/// X_a X_b = q^{skew[a][b]} X_b X_a.
class QCommAlgebra {
public:
    QCommAlgebra(const FieldContext& f, IntMatrix skew, bool laurent)
        : field_(&f), skew_(std::move(skew)), laurent_(laurent) {
        const std::size_t n = skew_.size();
        for (std::size_t a = 0; a < n; ++a) {
            if (skew_[a].size() != n) throw std::invalid_argument("QCommAlgebra: matrix must be square");
            for (std::size_t b = 0; b < n; ++b)
                if (skew_[a][b] != -skew_[b][a]) throw std::invalid_argument("QCommAlgebra: matrix must be antisymmetric");
        }
    }

    const FieldContext& field() const noexcept { return *field_; }
    int rank() const noexcept { return static_cast<int>(skew_.size()); }
    const IntMatrix& skew() const noexcept { return skew_; }
    bool laurent() const noexcept { return laurent_; }

    /// q-exponent picked up when X^a X^b is brought into normal order:
    /// every X_d^{a_d} with d > c moves right past X_c^{b_c}.
    long long reorder_exponent(const Exponents& a, const Exponents& b) const {
        long long e = 0;
        for (std::size_t c = 0; c < a.size(); ++c)
            for (std::size_t d = c + 1; d < a.size(); ++d) e += skew_[d][c] * a[d] * b[c];
        return e;
    }

private:
    const FieldContext* field_;
    IntMatrix skew_;
    bool laurent_;
};

class LaurentElement {
public:
    using Terms = std::map<Exponents, CycNum>;

    explicit LaurentElement(const QCommAlgebra& alg) : alg_(&alg) {}

    static LaurentElement unit(const QCommAlgebra& alg) {
        LaurentElement out(alg);
        out.add_term(Exponents(static_cast<std::size_t>(alg.rank()), 0), CycNum(alg.field(), 1L));
        return out;
    }
    /// c * X^exps.
    static LaurentElement monomial(const QCommAlgebra& alg, Exponents exps, const CycNum& c) {
        LaurentElement out(alg);
        out.add_term(std::move(exps), c);
        return out;
    }
    /// X_index^power (index 0-based).
    static LaurentElement variable(const QCommAlgebra& alg, int index, int power = 1) {
        Exponents e(static_cast<std::size_t>(alg.rank()), 0);
        e.at(static_cast<std::size_t>(index)) = power;
        return monomial(alg, std::move(e), CycNum(alg.field(), 1L));
    }

    const QCommAlgebra& algebra() const noexcept { return *alg_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(Exponents exps, const CycNum& c) {
        if (static_cast<int>(exps.size()) != alg_->rank()) throw std::invalid_argument("LaurentElement: wrong rank");
        if (!alg_->laurent())
            for (int e : exps)
                if (e < 0) throw std::domain_error("LaurentElement: negative exponent in an affine space");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }
    friend LaurentElement operator*(const CycNum& s, const LaurentElement& a) {
        LaurentElement out(*a.alg_);
        for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
        return out;
    }
    friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) { return t_mul(a, b); }

    friend LaurentElement t_mul(const LaurentElement& a, const LaurentElement& b) {
        if (a.alg_ != b.alg_) throw std::invalid_argument("t_mul: operands from different algebras");
        const QCommAlgebra& alg = *a.alg_;
        LaurentElement out(alg);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents sum(ea.size());
                for (std::size_t i = 0; i < ea.size(); ++i) sum[i] = ea[i] + eb[i];
                out.add_term(std::move(sum), ca * cb * CycNum::q_pow(alg.field(), alg.reorder_exponent(ea, eb)));
            }
        return out;
    }

    friend bool operator==(const LaurentElement& a, const LaurentElement& b) {
        return a.alg_ == b.alg_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string() + ")";
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) s += "*X" + std::to_string(i + 1) + (e[i] == 1 ? "" : "^" + std::to_string(e[i]));
        }
        return s;
    }

private:
    const QCommAlgebra* alg_;
    Terms terms_;
};

/// Skew matrix of the rank-4 torus read off its relation list
/// X1X2 = q^-2 X2X1, X1X3 = X3X1, X1X4 = q^2 X4X1,
/// X2X3 = X3X2, X2X4 = q^-2 X4X2, X3X4 = X4X3.
inline IntMatrix embedding_torus_skew() {
    return {{0, -2, 0, 2}, {2, 0, 0, -2}, {0, 0, 0, 0}, {-2, 2, 0, 0}};
}

/// The quasipolynomial algebra on X1, X2, X3, Z in q-exponents:
/// X3X1 = q^2 X1X3, X3X2 = q^-2 X2X3, X2X1 = q^-2 X1X2, Z central.
inline IntMatrix affine_space_skew() {
    return {{0, 2, -2, 0}, {-2, 0, 2, 0}, {2, -2, 0, 0}, {0, 0, 0, 0}};
}

/// Which coefficient of X2^-1 X3 to use in the image of e2.
enum class E2Image {
    printed,    // (q^4 - 1), as displayed alongside lambda
    corrected,  // (q^-4 - 1), the value forced by e2 e3 - q^2 e3 e2 = z
};

/// lambda = q / ((q^2 - q^-2)(q - q^-1)).
inline CycNum embedding_lambda(const FieldContext& f) {
    auto q = [&](long long e) { return CycNum::q_pow(f, e); };
    const CycNum denom = (q(2) - q(-2)) * (q(1) - q(-1));
    if (denom.is_zero()) throw std::domain_error("embedding: lambda has a vanishing denominator");
    return q(1) / denom;
}

/// Image of a generator: e1 -> X1, e3 -> X2, z -> X3,
/// e2 -> lambda (X4 + c X2^-1 X3 + (q^-2 - 1) X2 X1^-1).
inline LaurentElement embedding_image(const QCommAlgebra& torus, const std::string& gen, E2Image variant = E2Image::printed) {
    const FieldContext& f = torus.field();
    if (!torus.laurent() || torus.rank() != 4) throw std::invalid_argument("embedding_image: needs the rank-4 torus");
    auto q = [&](long long e) { return CycNum::q_pow(f, e); };
    const CycNum one(f, 1L);
    if (gen == "e1") return LaurentElement::variable(torus, 0);
    if (gen == "e3") return LaurentElement::variable(torus, 1);
    if (gen == "z") return LaurentElement::variable(torus, 2);
    if (gen == "e2") {
        const CycNum lambda = embedding_lambda(f);
        const CycNum c = variant == E2Image::printed ? q(4) - one : q(-4) - one;
        auto x = [&](int i, int p) { return LaurentElement::variable(torus, i, p); };
        // Products are formed in the written order; X2 X1^-1 is not normal-ordered.
        return lambda * (x(3, 1) + c * (x(1, -1) * x(2, 1)) + (q(-2) - one) * (x(1, 1) * x(0, -1)));
    }
    throw std::invalid_argument("embedding_image: unknown generator " + gen);
}

struct EmbeddingReport {
    std::vector<std::pair<std::string, LaurentElement>> residuals;  // every relation image
    LaurentElement z_prime_image;
    LaurentElement x2x4x1;
    bool z_prime_matches = false;

    bool all_vanish() const {
        for (const auto& [_, r] : residuals)
            if (!r.is_zero()) return false;
        return true;
    }
};

/// Images of the four-generator relations and both Serre relations, plus
/// the image of z' compared against X2 X4 X1.
inline EmbeddingReport verify_embedding(const QCommAlgebra& torus, E2Image variant = E2Image::printed) {
    const FieldContext& f = torus.field();
    std::map<std::string, LaurentElement> images;
    for (const char* g : {"e1", "e2", "e3", "z"}) images.emplace(g, embedding_image(torus, g, variant));
    const LaurentElement one = LaurentElement::unit(torus), zero(torus);
    auto scale = [](const CycNum& c, const LaurentElement& x) { return c * x; };

    EmbeddingReport rep{{}, zero, zero, false};
    for (const auto& rel : relations::full(f))
        rep.residuals.emplace_back(rel.name, evaluate(rel.poly, images, one, zero, scale));

    auto q = [&](long long e) { return CycNum::q_pow(f, e); };
    const CycNum c1(f, 1L);
    WordPoly zp;
    zp.add(c1, {"e1", "z"})
        .add(q(2) - c1, {"e1", "e3", "e2"})
        .add(-q(4), {"z", "e1"})
        .add(-q(4) * (q(2) - c1), {"e3", "e2", "e1"});
    rep.z_prime_image = evaluate(zp, images, one, zero, scale);
    rep.x2x4x1 = LaurentElement::variable(torus, 1) * LaurentElement::variable(torus, 3) * LaurentElement::variable(torus, 0);
    rep.z_prime_matches = rep.z_prime_image == rep.x2x4x1;
    return rep;
}

}  // namespace uqb2::torus
