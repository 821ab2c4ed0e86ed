#pragma once

// Dense matrices over Q(zeta_m) and the exact linear algebra the module
// code needs: products, inverses, null spaces and incremental spans.

#include "cyclotomic.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uqb2 {

class Matrix {
public:
    Matrix(const FieldContext& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, CycNum(f)) {}

    static Matrix identity(const FieldContext& f, std::size_t n) {
        Matrix out(f, n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = CycNum(f, 1L);
        return out;
    }
    static Matrix scalar(const CycNum& c, std::size_t n) {
        Matrix out(c.field(), n, n);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = c;
        return out;
    }

    const FieldContext& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    CycNum& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const CycNum& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<CycNum>& data() const noexcept { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// The scalar c if this is c * I.
    std::optional<CycNum> as_scalar() const {
        if (rows_ != cols_) return std::nullopt;
        const CycNum c = rows_ == 0 ? CycNum(*field_) : (*this)(0, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const CycNum& x = (*this)(i, j);
                if (i == j ? x != c : !x.is_zero()) return std::nullopt;
            }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.check_shape(b);
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.check_shape(b);
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend Matrix operator*(const CycNum& c, Matrix a) {
        for (auto& x : a.a_)
            if (!x.is_zero()) x = c * x;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix out(*a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const CycNum& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const CycNum& y = b(k, j);
                    if (!y.is_zero()) out(i, j) += x * y;
                }
            }
        return out;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    Matrix pow(int e) const {
        if (e < 0) throw std::domain_error("Matrix::pow: negative exponent");
        Matrix result = identity(*field_, rows_), base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    /// Rank by Gaussian elimination.
    std::size_t rank() const;
    /// Inverse, or nullopt when singular.
    std::optional<Matrix> inverse() const;

private:
    void check_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    const FieldContext* field_;
    std::size_t rows_, cols_;
    std::vector<CycNum> a_;
};

/// Incrementally maintained echelon basis of a subspace of K^n.  Stored rows
/// have pivot 1 and vanish at every earlier row's pivot.
class EchelonSpan {
public:
    EchelonSpan(const FieldContext& f, std::size_t n) : field_(&f), n_(n) {}

    std::size_t dim() const noexcept { return rows_.size(); }
    std::size_t ambient() const noexcept { return n_; }

    /// Reduces v against the basis; returns the residue.
    std::vector<CycNum> reduce(std::vector<CycNum> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p].is_zero()) continue;
            const CycNum c = v[p];
            const auto& row = rows_[r];
            for (std::size_t j = p; j < n_; ++j)
                if (!row[j].is_zero()) v[j] -= c * row[j];
        }
        return v;
    }

    bool contains(const std::vector<CycNum>& v) const { return is_zero_vec(reduce(v)); }

    /// Adds v if independent; returns whether the dimension grew.
    bool insert(const std::vector<CycNum>& v) {
        auto res = reduce(v);
        std::size_t p = 0;
        while (p < n_ && res[p].is_zero()) ++p;
        if (p == n_) return false;
        const CycNum inv = res[p].inverse();
        for (std::size_t j = p; j < n_; ++j)
            if (!res[j].is_zero()) res[j] *= inv;
        rows_.push_back(std::move(res));
        pivots_.push_back(p);
        return true;
    }

    static bool is_zero_vec(const std::vector<CycNum>& v) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    const FieldContext* field_;
    std::size_t n_;
    std::vector<std::vector<CycNum>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form in place, pivoting only within the first
/// `cols` columns but applying row operations to whole rows.  Returns the
/// pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<CycNum>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const std::size_t width = m[r].size();
        const CycNum inv = m[r][c].inverse();
        for (std::size_t j = c; j < width; ++j)
            if (!m[r][j].is_zero()) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const CycNum f = m[i][c];
            for (std::size_t j = c; j < width; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Basis of { x : A x = 0 } for the system given by its rows.
inline std::vector<std::vector<CycNum>> null_space(const FieldContext& f, std::vector<std::vector<CycNum>> rows,
                                                   std::size_t cols) {
    const auto pivots = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<CycNum>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<CycNum> x(cols, CycNum(f));
        x[free] = CycNum(f, 1L);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

inline std::size_t Matrix::rank() const {
    std::vector<std::vector<CycNum>> m;
    for (std::size_t i = 0; i < rows_; ++i) m.emplace_back(a_.begin() + static_cast<long>(i * cols_),
                                                           a_.begin() + static_cast<long>((i + 1) * cols_));
    return rref(m, cols_).size();
}

inline std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::inverse: not square");
    const std::size_t n = rows_;
    std::vector<std::vector<CycNum>> aug;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<CycNum> row(2 * n, CycNum(*field_));
        for (std::size_t j = 0; j < n; ++j) row[j] = (*this)(i, j);
        row[n + i] = CycNum(*field_, 1L);
        aug.push_back(std::move(row));
    }
    if (rref(aug, n).size() != n) return std::nullopt;
    Matrix out(*field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug[i][n + j];
    return out;
}

}  // namespace uqb2
