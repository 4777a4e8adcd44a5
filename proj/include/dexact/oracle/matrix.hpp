#pragma once

// Dense matrices over an exact field and the handful of elimination
// routines the oracle needs (rank, kernel, solve, complements).

#include "dexact/oracle/field.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dexact::oracle {

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = F(1);
        return m;
    }

    /// Column vector built from entries.
    static Matrix column(const std::vector<F>& entries)
    {
        Matrix m(entries.size(), 1);
        for (std::size_t i = 0; i < entries.size(); ++i)
            m(i, 0) = entries[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!oracle::is_zero(x))
                return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        assert(r0 + nr <= rows_ && c0 + nc <= cols_);
        Matrix b(nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c)
                b(r, c) = (*this)(r0 + r, c0 + c);
        return b;
    }

    Matrix col(std::size_t c) const { return block(0, c, rows_, 1); }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b)
    {
        assert(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_);
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c)
                (*this)(r0 + r, c0 + c) = b(r, c);
    }

    static Matrix hcat(const Matrix& a, const Matrix& b)
    {
        assert(a.rows_ == b.rows_ || a.cols_ == 0 || b.cols_ == 0);
        std::size_t rows = a.cols_ == 0 ? b.rows_ : a.rows_;
        Matrix m(rows, a.cols_ + b.cols_);
        if (a.cols_ > 0)
            m.set_block(0, 0, a);
        if (b.cols_ > 0)
            m.set_block(0, a.cols_, b);
        return m;
    }

    static Matrix vcat(const Matrix& a, const Matrix& b)
    {
        assert(a.cols_ == b.cols_ || a.rows_ == 0 || b.rows_ == 0);
        std::size_t cols = a.rows_ == 0 ? b.cols_ : a.cols_;
        Matrix m(a.rows_ + b.rows_, cols);
        if (a.rows_ > 0)
            m.set_block(0, 0, a);
        if (b.rows_ > 0)
            m.set_block(a.rows_, 0, b);
        return m;
    }

    /// Entries in row-major order.
    const std::vector<F>& entries() const { return data_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        assert(a.cols_ == b.rows_);
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (oracle::is_zero(aik))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!oracle::is_zero(b(k, j)))
                        m(i, j) += aik * b(k, j);
            }
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(const F& s, Matrix a)
    {
        for (auto& x : a.data_)
            x *= s;
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string str() const
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t r = 0; r < rows_; ++r) {
            os << (r ? "; " : "");
            for (std::size_t c = 0; c < cols_; ++c)
                os << (c ? " " : "") << to_string((*this)(r, c));
        }
        os << ']';
        return os.str();
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

template <class F>
struct Echelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Reduced row echelon form.
template <class F>
Echelon<F> rref(Matrix<F> m)
{
    Echelon<F> out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && is_zero(m(piv, col)))
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(piv, c), m(row, c));
        F inv = F(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col)))
                continue;
            F factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!is_zero(m(row, c)))
                    m(r, c) -= factor * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m)
{
    if (m.empty())
        return 0;
    return rref(m).pivots.size();
}

/// Basis of the null space, one vector per column.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m)
{
    const std::size_t n = m.cols();
    if (m.rows() == 0)
        return Matrix<F>::identity(n);
    auto e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Matrix<F> k(n, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        k(free_cols[j], j) = F(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            k(e.pivots[r], j) = -e.reduced(r, free_cols[j]);
    }
    return k;
}

/// Indices of a maximal linearly independent subset of the columns (greedy, left to right).
template <class F>
std::vector<std::size_t> independent_columns(const Matrix<F>& m)
{
    if (m.empty())
        return {};
    return rref(m).pivots;
}

template <class F>
Matrix<F> select_columns(const Matrix<F>& m, const std::vector<std::size_t>& cols)
{
    Matrix<F> out(m.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t r = 0; r < m.rows(); ++r)
            out(r, j) = m(r, cols[j]);
    return out;
}

/// Solve a * x = b; nullopt if inconsistent. Returns one particular solution.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b)
{
    assert(a.rows() == b.rows());
    const std::size_t n = a.cols();
    Matrix<F> x(n, b.cols());
    if (a.rows() == 0)
        return x;
    auto e = rref(Matrix<F>::hcat(a, b));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::size_t p = e.pivots[r];
        if (p >= n)
            return std::nullopt; // pivot in the augmented block
        for (std::size_t c = 0; c < b.cols(); ++c)
            x(p, c) = e.reduced(r, n + c);
    }
    return x;
}

/// Columns extending the column span of `sub` to the whole ambient space
/// (standard basis vectors chosen greedily).
template <class F>
Matrix<F> complement_basis(const Matrix<F>& sub, std::size_t ambient)
{
    Matrix<F> base = sub.cols() == 0 ? Matrix<F>(ambient, 0) : sub;
    Matrix<F> all = Matrix<F>::hcat(base, Matrix<F>::identity(ambient));
    std::vector<std::size_t> extra;
    for (auto p : independent_columns(all))
        if (p >= base.cols())
            extra.push_back(p);
    return select_columns(all, extra);
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m)
{
    assert(m.rows() == m.cols());
    auto x = solve(m, Matrix<F>::identity(m.rows()));
    if (!x || rank(m) != m.rows())
        throw std::domain_error("matrix is not invertible");
    return *x;
}

} // namespace dexact::oracle
