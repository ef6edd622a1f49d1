#include "subspace_forge/matrix.hpp"

#include <string>
#include <utility>

#include "subspace_forge/errors.hpp"

namespace subspace_forge {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw ParameterError("matrix has " + std::to_string(data_.size()) + " entries, expected " +
                             std::to_string(rows_ * cols_));
    for (auto e : data_)
        if (!field_.contains(e)) throw ParameterError("matrix entry " + std::to_string(e) + " is not a field element");
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows) {
    std::vector<Elem> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw ParameterError("row length " + std::to_string(r.size()) + " != " + std::to_string(cols));
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(entries));
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix out(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

std::vector<Vec> Matrix::row_vectors() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw ParameterError("matrix product over different fields");
    if (a.cols() != b.rows()) throw ParameterError("matrix product dimension mismatch");
    const Field& f = a.field();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const Elem x = a(i, t);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(t, j)));
        }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw ParameterError("stacking matrices over different fields");
    if (a.cols() != b.cols()) throw ParameterError("stacking matrices of different widths");
    std::vector<Elem> entries(a.entries());
    entries.insert(entries.end(), b.entries().begin(), b.entries().end());
    return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(entries));
}

namespace {

void swap_rows(std::span<Elem> data, std::size_t cols, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(data[r1 * cols + c], data[r2 * cols + c]);
}

// target -= factor * source, over columns [from, cols).
void axpy_row(const Field& f, std::span<Elem> data, std::size_t cols, std::size_t target, std::size_t source,
              Elem factor, std::size_t from) {
    const Elem neg_factor = f.neg(factor);
    for (std::size_t c = from; c < cols; ++c) {
        const Elem s = data[source * cols + c];
        if (s != 0) data[target * cols + c] = f.add(data[target * cols + c], f.mul(neg_factor, s));
    }
}

}  // namespace

std::size_t eliminate_rank(const Field& f, std::span<Elem> data, std::size_t rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && data[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        swap_rows(data, cols, rank, pivot);
        const Elem inv = f.inv(data[rank * cols + c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Elem x = data[r * cols + c];
            if (x != 0) axpy_row(f, data, cols, r, rank, f.mul(x, inv), c);
        }
        ++rank;
    }
    return rank;
}

RrefResult rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix r = m;
    const std::size_t rows = r.rows(), cols = r.cols();
    std::span<Elem> data = r.data();
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && data[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        swap_rows(data, cols, rank, pivot);
        const Elem inv = f.inv(data[rank * cols + c]);
        for (std::size_t cc = c; cc < cols; ++cc) data[rank * cols + cc] = f.mul(data[rank * cols + cc], inv);
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == rank) continue;
            const Elem x = data[rr * cols + c];
            if (x != 0) axpy_row(f, data, cols, rr, rank, x, c);
        }
        pivots.push_back(c);
        ++rank;
    }
    return {std::move(r), rank, std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    std::vector<Elem> scratch(m.entries());
    return eliminate_rank(m.field(), scratch, m.rows(), m.cols());
}

Matrix kernel_basis(const Matrix& m) {
    const Field& f = m.field();
    const auto [reduced, rk, pivots] = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < rk; ++r) v[pivots[r]] = f.neg(reduced(r, free));
        gens.push_back(std::move(v));
    }
    if (gens.empty()) return Matrix(f, 0, cols);
    auto canon = rref(Matrix::from_rows(f, cols, gens));
    return canon.reduced;
}

std::size_t rank_of_stack(const Matrix& a, const Matrix& b) { return rank(vstack(a, b)); }

}  // namespace subspace_forge
