// Copyright 2026 The Frobenia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FROBENIA_LINALG_HPP
#define FROBENIA_LINALG_HPP

#include <bit>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "frobenia/poly.hpp"
#include "frobenia/rational.hpp"

namespace frobenia {

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Poly& p) { return p.is_zero(); }

/// Coordinate types an element may carry: exact numbers or symbolic polynomials.
template <class S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, Poly>;

/// Dense exact matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> column(std::size_t j) const;
    std::vector<Rational> row(std::size_t i) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, Matrix a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Columns form a basis of the right null space.
Matrix nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(Matrix m);
/// Some solution of m x = b, if one exists.
std::optional<std::vector<Rational>> solve(const Matrix& m, std::span<const Rational> b);
/// A maximal independent subset of the columns, as indices.
std::vector<std::size_t> independent_columns(const Matrix& m);

/// Expresses vectors in the basis given by the (independent) columns of a matrix.
///
/// A vector outside the column span is reported as std::nullopt; the residual
/// is always checked, so a returned coordinate vector is exact.
class ColumnBasis {
public:
    ColumnBasis() = default;
    explicit ColumnBasis(Matrix columns);

    const Matrix& columns() const noexcept { return columns_; }
    std::size_t ambient_dim() const noexcept { return columns_.rows(); }
    std::size_t dim() const noexcept { return columns_.cols(); }

    template <Scalar S>
    std::optional<std::vector<S>> coordinates(std::span<const S> v) const;

    template <Scalar S>
    std::vector<S> embed(std::span<const S> coords) const;

private:
    Matrix columns_;
    std::vector<std::size_t> pivot_rows_;
    Matrix pivot_inverse_; // inverse of the pivot-row submatrix
};

template <Scalar S>
std::vector<S> ColumnBasis::embed(std::span<const S> coords) const
{
    if (coords.size() != dim())
        throw std::invalid_argument("coordinate vector has wrong length");
    std::vector<S> v(ambient_dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(coords[j]))
            continue;
        for (std::size_t i = 0; i < ambient_dim(); ++i)
            if (!frobenia::is_zero(columns_(i, j)))
                v[i] += coords[j] * columns_(i, j);
    }
    return v;
}

template <Scalar S>
std::optional<std::vector<S>> ColumnBasis::coordinates(std::span<const S> v) const
{
    if (v.size() != ambient_dim())
        throw std::invalid_argument("vector has wrong length for this basis");
    std::vector<S> c(dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k)
            if (!frobenia::is_zero(pivot_inverse_(j, k)) && !is_zero(v[pivot_rows_[k]]))
                c[j] += v[pivot_rows_[k]] * pivot_inverse_(j, k);
    const auto back = embed<S>(c);
    for (std::size_t i = 0; i < ambient_dim(); ++i)
        if (!(back[i] == v[i]))
            return std::nullopt;
    return c;
}

/// Determinant of a square matrix over a commutative ring by Laplace expansion
/// with shared minors (2^n subproblems). Entries need *, +=, -= and is_zero().
template <class T>
T laplace_determinant(const std::vector<std::vector<T>>& m, const T& zero, const T& one)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant of a non-square matrix");
    if (n > 20)
        throw std::invalid_argument("matrix too large for minor expansion");
    // minors[mask]: determinant of the last popcount(mask) rows on columns mask.
    std::vector<std::optional<T>> minors(std::size_t{1} << n);
    minors[0] = one;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t r = n - k;
        for (std::size_t mask = 1; mask < minors.size(); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != k)
                continue;
            T acc = zero;
            std::size_t before = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(mask >> j & 1U))
                    continue;
                const auto& sub = minors[mask & ~(std::size_t{1} << j)];
                if (!is_zero(m[r][j]) && sub && !is_zero(*sub)) {
                    if (before % 2 == 0)
                        acc += m[r][j] * *sub;
                    else
                        acc -= m[r][j] * *sub;
                }
                ++before;
            }
            minors[mask] = std::move(acc);
        }
    }
    return *minors.back();
}

} // namespace frobenia

#endif
