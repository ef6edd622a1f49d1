#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "subspace_forge/gf.hpp"

namespace subspace_forge {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    /// Throws ParameterError if entries.size() != rows*cols or any entry is
    /// not a field element.
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
    /// Matrix whose rows are `rows`; all rows must have length `cols`.
    static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix identity(Field field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Elem>& entries() const noexcept { return data_; }
    std::span<Elem> data() noexcept { return data_; }

    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
    std::vector<Vec> row_vectors() const;

    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
/// Vertical concatenation; throws ParameterError on field or width mismatch.
Matrix vstack(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;  // unique reduced row echelon form, zero rows kept at the bottom
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Rows form the canonical (RREF) basis of {v : M v^T = 0}.
Matrix kernel_basis(const Matrix& m);

/// Rank of the vertical concatenation of a and b.
std::size_t rank_of_stack(const Matrix& a, const Matrix& b);

/// In-place Gaussian elimination on a rows x cols row-major buffer; returns
/// the rank. The buffer is left in row echelon (not reduced) form.
std::size_t eliminate_rank(const Field& field, std::span<Elem> data, std::size_t rows, std::size_t cols);

}  // namespace subspace_forge
