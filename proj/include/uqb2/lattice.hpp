#pragma once

// Integer matrices: Smith normal form, PI degree of a q-commutation
// matrix, kernels modulo l and nonnegative Hilbert bases by enumeration.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uqb2 {

using IntMatrix = std::vector<std::vector<long long>>;

namespace lattice {

inline IntMatrix identity(std::size_t n) {
    IntMatrix out(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t r = a.size(), inner = b.size(), c = b.empty() ? 0 : b[0].size();
    IntMatrix out(r, std::vector<long long>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline long long determinant(IntMatrix a) {
    const std::size_t n = a.size();
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

inline bool is_antisymmetric(const IntMatrix& h) {
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i].size() != h.size()) return false;
        for (std::size_t j = 0; j < h.size(); ++j)
            if (h[i][j] != -h[j][i]) return false;
    }
    return true;
}

struct SNFDecomposition {
    IntMatrix u, d, v;               // u * h * v == d
    std::vector<long long> diag;     // d_1 | d_2 | ... then zeros
};

/// Smith normal form by elementary row and column operations, pivoting on
/// the smallest nonzero absolute value.
inline SNFDecomposition smith_normal_form(const IntMatrix& h) {
    const std::size_t rows = h.size();
    const std::size_t cols = rows == 0 ? 0 : h[0].size();
    for (const auto& row : h)
        if (row.size() != cols) throw std::invalid_argument("smith_normal_form: ragged matrix");

    SNFDecomposition out{identity(rows), h, identity(cols), {}};
    IntMatrix& d = out.d;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(d[a], d[b]);
        std::swap(u[a], u[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto& row : d) std::swap(row[a], row[b]);
        for (auto& row : v) std::swap(row[a], row[b]);
    };
    // row[dst] += f * row[src]
    auto add_row = [&](std::size_t dst, std::size_t src, long long f) {
        for (std::size_t j = 0; j < cols; ++j) d[dst][j] += f * d[src][j];
        for (std::size_t j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, long long f) {
        for (std::size_t i = 0; i < rows; ++i) d[i][dst] += f * d[i][src];
        for (std::size_t i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block goes to (t, t).
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (d[i][j] != 0 && (pi == rows || std::llabs(d[i][j]) < std::llabs(d[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) break;
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d[i][t] == 0) continue;
                add_row(i, t, -(d[i][t] / d[t][t]));
                if (d[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d[t][j] == 0) continue;
                add_col(j, t, -(d[t][j] / d[t][t]));
                if (d[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into row t and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) d[t][j] = -d[t][j];
            for (std::size_t j = 0; j < rows; ++j) u[t][j] = -u[t][j];
        }
    }
    for (std::size_t t = 0; t < steps; ++t) out.diag.push_back(d[t][t]);
    return out;
}

/// Multiplicative order of q^h for a primitive m-th root of unity q.
inline long long ord_root_pow(long long m, long long h) {
    long long r = ((h % m) + m) % m;
    return r == 0 ? 1 : m / std::gcd(m, r);
}

/// PI degree of the quantum torus with q-commutation matrix h, q a
/// primitive m-th root of unity.  Nonzero invariant factors of an
/// antisymmetric matrix pair up as (h1, h1, h2, h2, ...); the result is the
/// product of ord(q^{h_i}) over one member of each pair.  This reading of
/// the standard formula is exercised only on the built-in matrices.
inline long long pi_degree(const IntMatrix& h, long long m) {
    if (!is_antisymmetric(h)) throw std::invalid_argument("pi_degree: matrix must be antisymmetric");
    const auto snf = smith_normal_form(h);
    std::vector<long long> nonzero;
    for (long long x : snf.diag)
        if (x != 0) nonzero.push_back(x);
    if (nonzero.size() % 2 != 0) throw std::logic_error("pi_degree: odd number of nonzero invariant factors");
    long long deg = 1;
    for (std::size_t i = 0; i < nonzero.size(); i += 2) {
        if (nonzero[i] != nonzero[i + 1]) throw std::logic_error("pi_degree: invariant factors do not pair up");
        deg *= ord_root_pow(m, nonzero[i]);
    }
    return deg;
}

/// Z-basis (columns returned as vectors) of { v in Z^n : h v == 0 mod l }.
inline std::vector<std::vector<long long>> kernel_mod(const IntMatrix& h, long long l) {
    if (l < 1) throw std::domain_error("kernel_mod: l must be >= 1");
    const auto snf = smith_normal_form(h);
    const std::size_t cols = snf.v.size();
    std::vector<std::vector<long long>> basis;
    for (std::size_t i = 0; i < cols; ++i) {
        long long scale = 1;
        if (i < snf.diag.size() && snf.diag[i] != 0) scale = l / std::gcd(l, std::llabs(snf.diag[i]));
        std::vector<long long> col(cols);
        for (std::size_t r = 0; r < cols; ++r) col[r] = snf.v[r][i] * scale;
        basis.push_back(std::move(col));
    }
    return basis;
}

inline bool in_kernel_mod(const IntMatrix& h, const std::vector<long long>& x, long long l) {
    for (const auto& row : h) {
        long long s = 0;
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * x[j];
        if (s % l != 0) return false;
    }
    return true;
}

/// Minimal generators of the semigroup of nonnegative kernel points, found
/// by enumerating [0, bound]^n.  Complete only when every minimal generator
/// has all entries <= bound.
inline std::set<std::vector<long long>> nonneg_hilbert_basis(const IntMatrix& h, long long l, long long bound) {
    const std::size_t n = h.empty() ? 0 : h[0].size();
    std::vector<std::vector<long long>> points;
    std::vector<long long> x(n, 0);
    for (;;) {
        bool nonzero = std::any_of(x.begin(), x.end(), [](long long e) { return e != 0; });
        if (nonzero && in_kernel_mod(h, x, l)) points.push_back(x);
        std::size_t i = 0;
        while (i < n && x[i] == bound) x[i++] = 0;
        if (i == n) break;
        ++x[i];
    }
    auto below = [](const std::vector<long long>& a, const std::vector<long long>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return a != b;
    };
    // A nonzero kernel point strictly below v splits v as a sum of two.
    std::set<std::vector<long long>> out;
    for (const auto& p : points) {
        bool minimal = std::none_of(points.begin(), points.end(), [&](const auto& o) { return below(o, p); });
        if (minimal) out.insert(p);
    }
    return out;
}

/// q-commutation matrix of the torus used for the PI degree of U_q^+(B_2).
inline IntMatrix uqb2_matrix() { return {{0, 2, -2, 0}, {-2, 0, 2, 0}, {2, -2, 0, 0}, {0, 0, 0, 0}}; }
/// Matrix of the quantum affine space attached to the subalgebra B.
inline IntMatrix balg_matrix() { return {{0, 0, 0, 0}, {0, 0, 2, -2}, {0, -2, 0, 0}, {0, 2, 0, 0}}; }
/// Matrix of the quasipolynomial algebra on X1, X2, X3, Z with q^2 as the
/// defining parameter.
inline IntMatrix affine_space_matrix() { return {{0, 1, -1, 0}, {-1, 0, 1, 0}, {1, -1, 0, 0}, {0, 0, 0, 0}}; }

/// Built-in matrices by name, all in q-exponents ("qaspace" is therefore
/// twice `affine_space_matrix`).
inline IntMatrix builtin_matrix(const std::string& name) {
    if (name == "uqb2") return uqb2_matrix();
    if (name == "balg") return balg_matrix();
    if (name == "qaspace") {
        IntMatrix h = affine_space_matrix();
        for (auto& row : h)
            for (auto& x : row) x *= 2;
        return h;
    }
    throw std::invalid_argument("unknown matrix name: " + name);
}

}  // namespace lattice
}  // namespace uqb2
