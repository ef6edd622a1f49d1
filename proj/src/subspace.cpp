#include "subspace_forge/subspace.hpp"

#include <algorithm>
#include <string>

#include "subspace_forge/errors.hpp"
#include "subspace_forge/util.hpp"

namespace subspace_forge {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw ParameterError("subspaces live in different ambient spaces");
    if (!(a.field() == b.field())) throw ParameterError("subspaces are over different fields");
}

}  // namespace

Subspace Subspace::from_generators(const Field& field, std::size_t n, const std::vector<Vec>& vectors) {
    if (vectors.empty()) throw ParameterError("empty generator set");
    return from_matrix(Matrix::from_rows(field, n, vectors));
}

Subspace Subspace::from_matrix(const Matrix& generators) {
    auto r = rref(generators);
    if (r.rank == 0) throw ParameterError("generators span the zero subspace");
    std::vector<Elem> entries(r.reduced.entries().begin(),
                              r.reduced.entries().begin() + static_cast<std::ptrdiff_t>(r.rank * generators.cols()));
    return Subspace(Matrix(generators.field(), r.rank, generators.cols(), std::move(entries)), std::move(r.pivots));
}

Vec Subspace::reduce(std::span<const Elem> v) const {
    if (v.size() != ambient()) throw ParameterError("vector length does not match ambient dimension");
    const Field& f = field();
    Vec out(v.begin(), v.end());
    for (std::size_t r = 0; r < dim(); ++r) {
        const Elem x = out[pivots_[r]];
        if (x == 0) continue;
        const Elem nx = f.neg(x);
        const auto row = basis_.row(r);
        for (std::size_t c = pivots_[r]; c < out.size(); ++c)
            if (row[c] != 0) out[c] = f.add(out[c], f.mul(nx, row[c]));
    }
    return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
    const Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

std::vector<Vec> Subspace::points() const {
    const Field& f = field();
    const std::uint64_t q = f.q();
    const std::uint64_t total = pow_or_throw(q, dim(), "subspace size");
    std::vector<Vec> out;
    out.reserve(total);
    std::vector<Elem> coeff(dim(), 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        Vec v(ambient(), 0);
        for (std::size_t r = 0; r < dim(); ++r) {
            if (coeff[r] == 0) continue;
            const auto row = basis_.row(r);
            for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.add(v[c], f.mul(coeff[r], row[c]));
        }
        out.push_back(std::move(v));
        for (std::size_t r = dim(); r-- > 0;) {
            if (++coeff[r] < q) break;
            coeff[r] = 0;
        }
    }
    return out;
}

std::size_t Subspace::hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : basis_.entries()) h = (h ^ e) * 1099511628211ull;
    return h ^ (basis_.rows() << 16) ^ basis_.cols();
}

Vec coset_canonical_rep(const AffineCoset& c) { return c.sub.reduce(c.rep); }

bool trivially_intersects(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    return rank_of_stack(a.basis(), b.basis()) == a.dim() + b.dim();
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    return Subspace::from_matrix(vstack(a.basis(), b.basis()));
}

Subspace span_with(const Subspace& s, std::span<const Elem> u) {
    if (s.contains(u)) throw ParameterError("vector already lies in the subspace");
    Matrix extra(s.field(), 1, s.ambient(), Vec(u.begin(), u.end()));
    return Subspace::from_matrix(vstack(s.basis(), extra));
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b);
    const std::size_t n = a.ambient();
    const Matrix ha = a.parity_check();
    const Matrix hb = b.parity_check();
    if (ha.rows() + hb.rows() == 0) return n;
    if (ha.rows() == 0) return n - rank(hb);
    if (hb.rows() == 0) return n - rank(ha);
    return n - rank_of_stack(ha, hb);
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k) {
    if (k > n) return 0;
    // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), kept integral at every step.
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t num = pow_or_throw(q, n - i, "gaussian binomial") - 1;
        const std::uint64_t den = pow_or_throw(q, i + 1, "gaussian binomial") - 1;
        const unsigned __int128 wide = static_cast<unsigned __int128>(acc) * num;
        const unsigned __int128 next = wide / den;
        if (next > UINT64_MAX) throw ParameterError("gaussian binomial overflows 64 bits");
        acc = static_cast<std::uint64_t>(next);
    }
    return acc;
}

SubspaceEnumerator::SubspaceEnumerator(Field field, std::size_t n, std::size_t k)
    : field_(std::move(field)), n_(n), k_(k) {
    if (k < 1 || k > n) throw ParameterError("enumeration requires 1 <= k <= n");
    const std::uint64_t q = field_.q();
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
        Pattern pat;
        pat.pivots = comb;
        std::vector<bool> is_pivot(n, false);
        for (auto c : comb) is_pivot[c] = true;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = comb[r] + 1; c < n; ++c)
                if (!is_pivot[c]) pat.free_slots.emplace_back(r, c);
        pat.first = total_;
        pat.size = pow_or_throw(q, pat.free_slots.size(), "subspace count");
        if (__builtin_add_overflow(total_, pat.size, &total_))
            throw ParameterError("subspace count overflows 64 bits");
        patterns_.push_back(std::move(pat));

        std::size_t i = k;
        while (i > 0 && comb[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
}

Subspace SubspaceEnumerator::at(std::uint64_t index) const {
    if (index >= total_) throw ParameterError("subspace index out of range");
    auto it = std::upper_bound(patterns_.begin(), patterns_.end(), index,
                               [](std::uint64_t i, const Pattern& p) { return i < p.first; });
    const Pattern& pat = *(it - 1);
    std::uint64_t code = index - pat.first;
    Matrix basis(field_, k_, n_);
    for (std::size_t r = 0; r < k_; ++r) basis(r, pat.pivots[r]) = 1;
    const std::uint64_t q = field_.q();
    for (std::size_t s = pat.free_slots.size(); s-- > 0;) {
        const auto [r, c] = pat.free_slots[s];
        basis(r, c) = static_cast<Elem>(code % q);
        code /= q;
    }
    return Subspace(std::move(basis), pat.pivots);
}

CosetIndexer::CosetIndexer(Subspace s) : sub_(std::move(s)) {
    std::vector<bool> is_pivot(sub_.ambient(), false);
    for (auto p : sub_.pivots()) is_pivot[p] = true;
    for (std::size_t c = 0; c < sub_.ambient(); ++c)
        if (!is_pivot[c]) free_cols_.push_back(c);
    count_ = pow_or_throw(sub_.field().q(), free_cols_.size(), "coset count");
}

std::uint64_t CosetIndexer::index(std::span<const Elem> v) const {
    const Vec r = sub_.reduce(v);
    const std::uint64_t q = sub_.field().q();
    std::uint64_t idx = 0;
    for (auto c : free_cols_) idx = idx * q + r[c];
    return idx;
}

Vec CosetIndexer::rep(std::uint64_t index) const {
    if (index >= count_) throw ParameterError("coset index out of range");
    const std::uint64_t q = sub_.field().q();
    Vec v(sub_.ambient(), 0);
    for (std::size_t i = free_cols_.size(); i-- > 0;) {
        v[free_cols_[i]] = static_cast<Elem>(index % q);
        index /= q;
    }
    return v;
}

}  // namespace subspace_forge
