#pragma once

#include "scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace atl {

template <Scalar S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix adjoint() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conjugate((*this)(i, j));
        return t;
    }

    bool is_hermitian() const
    {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if (!is_zero((*this)(i, j) - conjugate((*this)(j, i)))) return false;
        return true;
    }

    std::vector<S> apply(const std::vector<S>& x) const
    {
        if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix product");
        std::vector<S> y(rows_, S(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!is_zero(x[j]) && !is_zero((*this)(i, j))) y[i] = y[i] + (*this)(i, j) * x[j];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!is_zero(a.data_[k] - b.data_[k])) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

template <Scalar S>
struct RowEchelon {
    Matrix<S> reduced;
    std::vector<std::size_t> pivot_columns;
    S determinant = S(1);
};

// reduced row echelon form by Gauss-Jordan elimination over the exact field
template <Scalar S>
RowEchelon<S> row_reduce(Matrix<S> a)
{
    RowEchelon<S> out;
    const std::size_t n = a.rows(), m = a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && is_zero(a(piv, col))) ++piv;
        if (piv == n) {
            out.determinant = S(0);
            continue;
        }
        if (piv != row) {
            for (std::size_t j = 0; j < m; ++j) std::swap(a(piv, j), a(row, j));
            out.determinant = S(0) - out.determinant;
        }
        const S p = a(row, col);
        out.determinant = out.determinant * p;
        const S inv = S(1) / p;
        for (std::size_t j = col; j < m; ++j)
            if (!is_zero(a(row, j))) a(row, j) = a(row, j) * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || is_zero(a(i, col))) continue;
            const S f = a(i, col);
            for (std::size_t j = col; j < m; ++j)
                if (!is_zero(a(row, j))) a(i, j) = a(i, j) - f * a(row, j);
        }
        out.pivot_columns.push_back(col);
        ++row;
    }
    if (row < n || n != m) out.determinant = S(0);
    out.reduced = std::move(a);
    return out;
}

template <Scalar S>
std::size_t rank(const Matrix<S>& a) { return row_reduce(a).pivot_columns.size(); }

template <Scalar S>
S determinant(const Matrix<S>& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (a.rows() == 0) return S(1);
    return row_reduce(a).determinant;
}

// basis of {x : a x = 0}
template <Scalar S>
std::vector<std::vector<S>> kernel(const Matrix<S>& a)
{
    const auto ech = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : ech.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<S> v(a.cols(), S(0));
        v[free] = S(1);
        for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r)
            v[ech.pivot_columns[r]] = S(0) - ech.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

enum class Definiteness { positive_definite, positive_semidefinite, indefinite };

struct DefinitenessReport {
    Definiteness kind = Definiteness::positive_definite;
    std::size_t corank = 0;  // meaningful for definite and semidefinite forms
    std::vector<Sign> pivot_signs;
};

// Hermitian elimination with diagonal pivoting; pivots are ratios of nested principal minors.
template <Scalar S>
DefinitenessReport classify_hermitian(Matrix<S> a)
{
    if (!a.is_hermitian()) throw std::invalid_argument("form is not Hermitian");
    DefinitenessReport rep;
    const std::size_t n = a.rows();
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = i;
    while (!live.empty()) {
        std::size_t k = live.size();
        for (std::size_t t = 0; t < live.size(); ++t)
            if (!is_zero(a(live[t], live[t]))) {
                k = t;
                break;
            }
        if (k == live.size()) {
            for (auto i : live)
                for (auto j : live)
                    if (!is_zero(a(i, j))) {
                        rep.kind = Definiteness::indefinite;
                        return rep;
                    }
            rep.corank = live.size();
            rep.kind = Definiteness::positive_semidefinite;
            return rep;
        }
        const std::size_t p = live[k];
        const Sign s = ScalarTraits<S>::sign(a(p, p));
        rep.pivot_signs.push_back(s);
        if (s == Sign::negative) {
            rep.kind = Definiteness::indefinite;
            return rep;
        }
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(k));
        const S inv = S(1) / a(p, p);
        for (auto i : live) {
            if (is_zero(a(i, p))) continue;
            const S f = a(i, p) * inv;
            for (auto j : live)
                if (!is_zero(a(p, j))) a(i, j) = a(i, j) - f * a(p, j);
        }
    }
    return rep;
}

template <Scalar S>
std::vector<S> leading_minors(const Matrix<S>& a)
{
    std::vector<S> out;
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        Matrix<S> sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(i, j);
        out.push_back(determinant(sub));
    }
    return out;
}

}  // namespace atl
