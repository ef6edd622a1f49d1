#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

#include "subspace_forge/matrix.hpp"

namespace subspace_forge {

/// A k-dimensional linear subspace of F_q^n held as its reduced row echelon
/// basis. The RREF is unique, so two Subspaces are equal iff their bases are.
class Subspace {
public:
    /// Canonical span of `vectors`. Throws ParameterError when a vector has the
    /// wrong length or the span is {0}.
    static Subspace from_generators(const Field& field, std::size_t n, const std::vector<Vec>& vectors);
    static Subspace from_matrix(const Matrix& generators);

    const Field& field() const noexcept { return basis_.field(); }
    std::size_t ambient() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Lexicographically smallest element of v + S: v with every pivot
    /// coordinate cleared.
    Vec reduce(std::span<const Elem> v) const;
    bool contains(std::span<const Elem> v) const;

    /// (n-k) x n matrix whose rows span the orthogonal complement.
    Matrix parity_check() const { return kernel_basis(basis_); }

    /// All q^k vectors of the subspace, in lexicographic order of their
    /// coefficient tuples over the basis rows.
    std::vector<Vec> points() const;

    friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.basis_ == b.basis_; }
    std::size_t hash() const noexcept;

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
    friend class SubspaceEnumerator;

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// u + S; `rep` is any member of the coset.
struct AffineCoset {
    Vec rep;
    Subspace sub;
};

/// Lexicographically smallest coset member; equal cosets give equal reps.
Vec coset_canonical_rep(const AffineCoset& c);

/// A ∩ B == {0}. Throws ParameterError on ambient/field mismatch.
bool trivially_intersects(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// span(S ∪ {u}); throws ParameterError when u ∈ S.
Subspace span_with(const Subspace& s, std::span<const Elem> u);
/// dim(A ∩ B) computed from the orthogonal complements: n - rank([H_A; H_B]).
std::size_t intersection_dim(const Subspace& a, const Subspace& b);

/// Number of k-dimensional subspaces of F_q^n. Throws ParameterError on
/// 64-bit overflow.
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k);

/// Random-access enumeration of all k-subspaces of F_q^n, ordered by pivot
/// column pattern (lexicographic) and then by the free RREF entries read
/// row-major with the first free entry most significant.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(Field field, std::size_t n, std::size_t k);

    std::uint64_t count() const noexcept { return total_; }
    Subspace at(std::uint64_t index) const;

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Subspace;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = Subspace;
        iterator() = default;
        iterator(const SubspaceEnumerator* e, std::uint64_t i) : e_(e), i_(i) {}
        Subspace operator*() const { return e_->at(i_); }
        iterator& operator++() {
            ++i_;
            return *this;
        }
        iterator operator++(int) {
            auto tmp = *this;
            ++i_;
            return tmp;
        }
        bool operator==(const iterator& o) const noexcept { return i_ == o.i_; }

    private:
        const SubspaceEnumerator* e_ = nullptr;
        std::uint64_t i_ = 0;
    };
    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, total_}; }

private:
    struct Pattern {
        std::vector<std::size_t> pivots;
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;  // (row, col)
        std::uint64_t first = 0;
        std::uint64_t size = 0;
    };

    Field field_;
    std::size_t n_;
    std::size_t k_;
    std::vector<Pattern> patterns_;
    std::uint64_t total_ = 0;
};

/// Indexes the q^{n-k} cosets of a subspace by the non-pivot coordinates of
/// their canonical representative, first non-pivot column most significant.
/// Index order therefore matches lexicographic order of canonical reps.
class CosetIndexer {
public:
    explicit CosetIndexer(Subspace s);

    const Subspace& subspace() const noexcept { return sub_; }
    std::uint64_t count() const noexcept { return count_; }
    std::uint64_t index(std::span<const Elem> v) const;
    Vec rep(std::uint64_t index) const;

private:
    Subspace sub_;
    std::vector<std::size_t> free_cols_;
    std::uint64_t count_;
};

}  // namespace subspace_forge

template <>
struct std::hash<subspace_forge::Subspace> {
    std::size_t operator()(const subspace_forge::Subspace& s) const noexcept { return s.hash(); }
};
