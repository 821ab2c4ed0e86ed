#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m).
//
// Elements are stored in the power basis 1, q, ..., q^{phi(m)-1} with GMP
// rational coefficients, always reduced modulo the m-th cyclotomic
// polynomial.  Equality is coefficientwise.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqb2 {

namespace detail {

using QPoly = std::vector<mpq_class>;  // ascending coefficients

inline void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Exact division of integer polynomials; `den` must divide `num`.
inline std::vector<mpz_class> exact_div(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    const std::size_t dn = den.size();
    if (num.size() < dn) return {};
    std::vector<mpz_class> quot(num.size() - dn + 1);
    for (std::size_t s = quot.size(); s-- > 0;) {
        mpz_class c = num[s + dn - 1];
        if (c % den.back() != 0) throw std::logic_error("cyclotomic: inexact division");
        c /= den.back();
        quot[s] = c;
        for (std::size_t t = 0; t < dn; ++t) num[s + t] -= c * den[t];
    }
    for (const auto& r : num)
        if (r != 0) throw std::logic_error("cyclotomic: nonzero remainder");
    return quot;
}

inline std::vector<mpz_class> cyclotomic_poly(int m, std::map<int, std::vector<mpz_class>>& memo) {
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    std::vector<mpz_class> num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = exact_div(num, cyclotomic_poly(d, memo));
    }
    memo[m] = num;
    return num;
}

// (quotient, remainder) over Q; divisor must be nonzero and trimmed.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    QPoly quot(a.size() - b.size() + 1);
    for (std::size_t s = quot.size(); s-- > 0;) {
        mpq_class c = a[s + b.size() - 1] / b.back();
        quot[s] = c;
        for (std::size_t t = 0; t < b.size(); ++t) a[s + t] -= c * b[t];
    }
    trim(a);
    return {quot, a};
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline QPoly poly_sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace detail

/// Immutable description of Q(zeta_m).  Obtain instances through
/// `FieldContext::get`; they live for the duration of the program, so
/// references and pointers to them never dangle.
class FieldContext {
public:
    static const FieldContext& get(int m) {
        if (m < 5) throw std::domain_error("field_init: m must be >= 5, got " + std::to_string(m));
        static std::mutex mutex;
        static std::map<int, std::unique_ptr<FieldContext>> registry;
        std::lock_guard lock(mutex);
        auto& slot = registry[m];
        if (!slot) slot.reset(new FieldContext(m));
        return *slot;
    }

    FieldContext(const FieldContext&) = delete;
    FieldContext& operator=(const FieldContext&) = delete;

    int m() const noexcept { return m_; }
    /// m for odd m, m/2 for even m; this is ord(q^2).
    int l() const noexcept { return m_ % 2 == 1 ? m_ : m_ / 2; }
    /// phi(m), the dimension of the field over Q.
    int degree() const noexcept { return degree_; }
    /// Coefficients of Phi_m, ascending, monic.
    const std::vector<mpz_class>& phi() const noexcept { return phi_; }

    /// Power-basis coordinates of q^k, 0 <= k < m.
    const std::vector<mpq_class>& power_coords(int k) const { return powers_.at(static_cast<std::size_t>(k)); }

    /// Reduced coordinates of x^{degree + t}, 0 <= t < degree - 1.
    const std::vector<mpz_class>& fold_row(std::size_t t) const { return fold_[t]; }

private:
    explicit FieldContext(int m) : m_(m) {
        std::map<int, std::vector<mpz_class>> memo;
        phi_ = detail::cyclotomic_poly(m, memo);
        degree_ = static_cast<int>(phi_.size()) - 1;
        const auto d = static_cast<std::size_t>(degree_);

        // x^{d+t} mod Phi, built by repeated multiplication by x.
        std::vector<mpz_class> cur(d, 0);
        for (std::size_t i = 0; i < d; ++i) cur[i] = -phi_[i];  // x^d
        for (std::size_t t = 0; t + 1 < d; ++t) {
            fold_.push_back(cur);
            std::vector<mpz_class> next(d, 0);
            const mpz_class top = cur[d - 1];
            for (std::size_t i = d - 1; i > 0; --i) next[i] = cur[i - 1];
            for (std::size_t i = 0; i < d; ++i) next[i] -= top * phi_[i];
            cur = std::move(next);
        }

        std::vector<mpq_class> p(d, 0);
        p[0] = 1;
        for (int k = 0; k < m; ++k) {
            powers_.push_back(p);
            const mpq_class top = p[d - 1];
            std::vector<mpq_class> next(d, 0);
            for (std::size_t i = d - 1; i > 0; --i) next[i] = p[i - 1];
            for (std::size_t i = 0; i < d; ++i) next[i] -= top * phi_[i];
            p = std::move(next);
        }
    }

    int m_;
    int degree_ = 0;
    std::vector<mpz_class> phi_;
    std::vector<std::vector<mpz_class>> fold_;
    std::vector<std::vector<mpq_class>> powers_;
};

inline const FieldContext& field_init(int m) { return FieldContext::get(m); }

/// An element of Q(zeta_m), canonical modulo Phi_m.
class CycNum {
public:
    explicit CycNum(const FieldContext& f) : field_(&f), c_(static_cast<std::size_t>(f.degree()), 0) {}
    CycNum(const FieldContext& f, const mpq_class& r) : CycNum(f) {
        c_[0] = r;
        c_[0].canonicalize();
    }
    CycNum(const FieldContext& f, long n) : CycNum(f, mpq_class(n)) {}
    CycNum(const FieldContext& f, std::vector<mpq_class> coeffs) : field_(&f), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<std::size_t>(f.degree()))
            throw std::invalid_argument("CycNum: coefficient vector must have length phi(m)");
        for (auto& x : c_) x.canonicalize();
    }

    /// q^k for any integer k.
    static CycNum q_pow(const FieldContext& f, long long k) {
        long long r = k % f.m();
        if (r < 0) r += f.m();
        return CycNum(f, f.power_coords(static_cast<int>(r)));
    }

    const FieldContext& field() const noexcept { return *field_; }
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (sgn(x) != 0) return false;
        return true;
    }
    bool is_one() const {
        if (c_[0] != 1) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }

    CycNum& operator+=(const CycNum& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CycNum& operator-=(const CycNum& o) {
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    CycNum& operator/=(const CycNum& o) { return *this = *this * o.inverse(); }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator-(CycNum a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        a.check_same(b);
        const std::size_t d = a.c_.size();
        if (a.is_rational()) return b.scaled(a.c_[0]);
        if (b.is_rational()) return a.scaled(b.c_[0]);
        std::vector<mpq_class> wide(2 * d - 1, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (sgn(b.c_[j]) == 0) continue;
                wide[i + j] += a.c_[i] * b.c_[j];
            }
        }
        CycNum r(*a.field_);
        for (std::size_t i = 0; i < d; ++i) r.c_[i] = wide[i];
        for (std::size_t t = 0; t + 1 < d; ++t) {
            const mpq_class& hi = wide[d + t];
            if (sgn(hi) == 0) continue;
            const auto& row = a.field_->fold_row(t);
            for (std::size_t i = 0; i < d; ++i)
                if (row[i] != 0) r.c_[i] += hi * row[i];
        }
        return r;
    }

    CycNum scaled(const mpq_class& r) const {
        CycNum out(*this);
        for (auto& x : out.c_) x *= r;
        return out;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm mod Phi_m.
    CycNum inverse() const {
        if (is_zero()) throw std::domain_error("invert: zero has no inverse");
        if (is_rational()) return CycNum(*field_, 1 / c_[0]);
        detail::QPoly r0, r1 = c_;
        for (const auto& x : field_->phi()) r0.emplace_back(x);
        detail::trim(r1);
        detail::QPoly s0, s1{mpq_class(1)};  // coefficient of a in each remainder
        while (r1.size() > 1) {
            auto [quot, rem] = detail::divmod(r0, r1);
            detail::QPoly s2 = detail::poly_sub(s0, detail::poly_mul(quot, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r1 is a nonzero constant since Phi_m is irreducible.
        const mpq_class g = r1.at(0);
        auto [_, red] = detail::divmod(s1, [&] {
            detail::QPoly p;
            for (const auto& x : field_->phi()) p.emplace_back(x);
            return p;
        }());
        CycNum out(*field_);
        for (std::size_t i = 0; i < red.size(); ++i) out.c_[i] = red[i] / g;
        return out;
    }

    CycNum pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        CycNum result(*field_, 1L), base(*this);
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    friend bool operator==(const CycNum& a, const CycNum& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Polynomial in q, e.g. "1 - 2*q + 1/3*q^3".  Parses back through the
    /// expression grammar.
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const mpq_class& x = c_[i];
            if (sgn(x) == 0) continue;
            mpq_class mag = abs(x);
            if (first) {
                if (sgn(x) < 0) os << "-";
            } else {
                os << (sgn(x) < 0 ? " - " : " + ");
            }
            first = false;
            if (i == 0) {
                os << mag.get_str();
                continue;
            }
            if (mag != 1) os << mag.get_str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        return first ? "0" : os.str();
    }

    /// Coefficients as exact rational strings ("p" or "p/q").
    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(x.get_str());
        return out;
    }

private:
    void check_same(const CycNum& o) const {
        if (field_ != o.field_) throw std::invalid_argument("CycNum: operands from different fields");
    }

    const FieldContext* field_;
    std::vector<mpq_class> c_;
};

/// Multiplicative order of q^k: m / gcd(m, k mod m).
inline int ord_q_pow(const FieldContext& f, long long k) {
    long long r = k % f.m();
    if (r < 0) r += f.m();
    if (r == 0) return 1;
    return f.m() / static_cast<int>(std::gcd(static_cast<long long>(f.m()), r));
}

/// (q^{step*k} - 1) / (q^step - 1).
inline CycNum q_bracket(const FieldContext& f, long long k, long long step) {
    if (step % f.m() == 0) throw std::domain_error("q_bracket: q^step = 1");
    const CycNum one(f, 1L);
    return (CycNum::q_pow(f, step * k) - one) / (CycNum::q_pow(f, step) - one);
}

}  // namespace uqb2
