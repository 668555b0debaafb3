#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "starcore/gaussian_rational.hpp"

namespace starcore {

using Scalar = GaussianRational;

// Dense row-major matrix of Gaussian rationals. The ring involution is
// star() (conjugate transpose).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw DimensionMismatch("entry count " + std::to_string(data_.size()) + " does not match " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged initializer list");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix diagonal(const std::vector<Scalar>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
    const std::vector<Scalar>& entries() const noexcept { return data_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& z : data_)
            if (!z.is_zero()) return false;
        return true;
    }

    Matrix star() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
        return t;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
        if (r0 + nrows > rows_ || c0 + ncols > cols_) throw DimensionMismatch("block out of range");
        Matrix b(nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o, "+");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o, "-");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const Scalar& s) {
        for (auto& z : data_) z *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& z : a.data_) z = -z;
        return a;
    }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("cannot multiply " + a.shape() + " by " + b.shape());
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    c(i, j) += aik * bkj;
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch(std::string("shape mismatch in '") + op + "': " + shape() + " vs " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

inline Matrix star(const Matrix& a) { return a.star(); }

inline void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) throw DimensionMismatch(std::string(what) + " requires a square matrix, got " + a.shape());
}

inline Matrix power(const Matrix& a, std::size_t k) {
    require_square(a, "power");
    Matrix result = Matrix::identity(a.rows());
    Matrix base = a;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

// [[a, b], [c, d]]; each block row/column must agree in size.
inline Matrix assemble(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
        throw DimensionMismatch("inconsistent block sizes " + a.shape() + ", " + b.shape() + ", " + c.shape() +
                                ", " + d.shape());
    Matrix m(a.rows() + c.rows(), a.cols() + b.cols());
    auto place = [&m](const Matrix& blk, std::size_t r0, std::size_t c0) {
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j) m(r0 + i, c0 + j) = blk(i, j);
    };
    place(a, 0, 0);
    place(b, 0, a.cols());
    place(c, a.rows(), 0);
    place(d, a.rows(), a.cols());
    return m;
}

inline Matrix block_diagonal(const Matrix& a, const Matrix& d) {
    return assemble(a, Matrix(a.rows(), d.cols()), Matrix(d.rows(), a.cols()), d);
}

// ---------------------------------------------------------------------------
// Row reduction
// ---------------------------------------------------------------------------

struct RowEchelon {
    Matrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

// Gauss-Jordan elimination over the field. The pivot is the first nonzero
// entry found scanning down the current column, so the result depends only
// on the input, never on magnitudes.
inline RowEchelon rref(Matrix m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        Scalar scale = m(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= scale;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Scalar f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline RowEchelon rref(const Matrix& m) { return rref(m, m.cols()); }

inline std::size_t rank(const Matrix& a) { return rref(a).rank(); }

// ---------------------------------------------------------------------------
// Inverses and linear solves
// ---------------------------------------------------------------------------

inline std::optional<Matrix> try_inverse(const Matrix& a) {
    require_square(a, "inverse");
    const std::size_t n = a.rows();
    Matrix aug = assemble(a, Matrix::identity(n), Matrix(0, n), Matrix(0, n));
    RowEchelon e = rref(std::move(aug), n);
    if (e.rank() < n) return std::nullopt;
    return e.reduced.block(0, n, n, n);
}

inline Matrix inverse(const Matrix& a) {
    auto inv = try_inverse(a);
    if (!inv) throw SingularMatrix();
    return *std::move(inv);
}

inline bool is_invertible(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

// Some X with A*X = B, or none.
inline std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve_left: " + a.shape() + " vs " + b.shape());
    Matrix aug = assemble(a, b, Matrix(0, a.cols()), Matrix(0, b.cols()));
    RowEchelon e = rref(std::move(aug), a.cols());
    for (std::size_t i = e.rank(); i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!e.reduced(i, a.cols() + j).is_zero()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, a.cols() + j);
    return x;
}

// Some X with X*A = B, or none.
inline std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("solve_right: " + a.shape() + " vs " + b.shape());
    auto xt = solve_left(a.transpose(), b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

// ---------------------------------------------------------------------------
// Full-rank factorization
// ---------------------------------------------------------------------------

struct FullRankFactorization {
    Matrix F; // m x r, full column rank
    Matrix G; // r x n, full row rank
    std::size_t rank = 0;
};

// F = pivot columns of A, G = nonzero rows of rref(A). The zero matrix
// factors with r = 0 (F is m x 0, G is 0 x n).
inline FullRankFactorization full_rank_factorize(const Matrix& a) {
    RowEchelon e = rref(a);
    const std::size_t r = e.rank();
    Matrix f(a.rows(), r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) f(i, k) = a(i, e.pivots[k]);
    return {std::move(f), e.reduced.block(0, 0, r, a.cols()), r};
}

// ---------------------------------------------------------------------------
// Idempotents and the Pierce decomposition
// ---------------------------------------------------------------------------

inline bool is_idempotent(const Matrix& p) { return p.is_square() && p * p == p; }

inline bool is_projection(const Matrix& p) {
    require_square(p, "is_projection");
    return p * p == p && p.star() == p;
}

// 1 - p
inline Matrix complement(const Matrix& p) {
    require_square(p, "complement");
    return Matrix::identity(p.rows()) - p;
}

// x = pxp + px(1-p) + (1-p)xp + (1-p)x(1-p), each corner kept full-size.
struct PierceBlocks {
    Matrix p;
    Matrix pp; // p x p
    Matrix pq; // p x (1-p)
    Matrix qp; // (1-p) x p
    Matrix qq; // (1-p) x (1-p)

    Matrix sum() const { return pp + pq + qp + qq; }
};

inline PierceBlocks pierce_decompose(const Matrix& x, const Matrix& p) {
    require_square(x, "pierce_decompose");
    if (x.rows() != p.rows() || !p.is_square())
        throw DimensionMismatch("pierce_decompose: " + x.shape() + " vs " + p.shape());
    if (p * p != p) throw NotIdempotent();
    Matrix q = complement(p);
    Matrix px = p * x;
    Matrix qx = q * x;
    return {p, px * p, px * q, qx * p, qx * q};
}

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

} // namespace starcore
