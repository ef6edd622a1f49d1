#include "subspace_forge/constructions.hpp"

#include <cmath>
#include <string>

#include "subspace_forge/errors.hpp"

namespace subspace_forge {

RSCodeSpec make_rs_code(std::size_t n, std::size_t k, const Field& field) {
    if (k < 1 || 2 * k >= n) throw ParameterError("Reed-Solomon family requires 1 <= k and 2k < n");
    if (field.q() < n * k)
        throw ParameterError("q < nk (q=" + std::to_string(field.q()) + ", nk=" + std::to_string(n * k) + ")");
    const std::size_t len = n - k - 1;
    Matrix h(field, k - 1, len);
    for (std::size_t t = 0; t + 1 < k; ++t)
        for (std::size_t c = 0; c < len; ++c) h(t, c) = field.gamma_pow(static_cast<std::int64_t>(c * t));
    Matrix g = kernel_basis(h);
    return {field, n, k, std::move(h), std::move(g)};
}

std::vector<Vec> rs_codewords(const RSCodeSpec& code) {
    const Field& f = code.field;
    const std::uint64_t q = f.q();
    const std::size_t dim = code.dimension(), len = code.length();
    const std::uint64_t total = pow_or_throw(q, dim, "codeword count");
    if (total > guards::enumeration()) throw GuardError("codeword count " + std::to_string(total) + " exceeds guard");
    std::vector<Vec> out;
    out.reserve(total);
    Vec msg(dim, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        Vec cw(len, 0);
        for (std::size_t r = 0; r < dim; ++r) {
            if (msg[r] == 0) continue;
            for (std::size_t c = 0; c < len; ++c) cw[c] = f.add(cw[c], f.mul(msg[r], code.generator(r, c)));
        }
        out.push_back(std::move(cw));
        for (std::size_t r = dim; r-- > 0;) {
            if (++msg[r] < q) break;
            msg[r] = 0;
        }
    }
    return out;
}

namespace {

void require_index(const RSCodeSpec& code, std::size_t j, std::span<const Elem> x) {
    if (j < 1 || j > code.k) throw ParameterError("j must lie in [1, k]");
    if (x.size() != code.length()) throw ParameterError("codeword length mismatch");
}

}  // namespace

Vec gamma_map(const RSCodeSpec& code, std::size_t j, std::span<const Elem> x) {
    require_index(code, j, x);
    const Field& f = code.field;
    Vec out(x.size());
    for (std::size_t p = 1; p <= x.size(); ++p)
        out[p - 1] = f.mul(f.gamma_pow(static_cast<std::int64_t>(p * (j - 1))), x[p - 1]);
    return out;
}

Elem h_func(const RSCodeSpec& code, std::size_t j, std::span<const Elem> x) {
    require_index(code, j, x);
    const Field& f = code.field;
    const std::size_t len = x.size();
    Elem acc = 0;
    for (std::size_t p = 1; p <= len; ++p) acc = f.add(acc, f.pow(x[p - 1], (j - 1) * len + p + 1));
    return acc;
}

Family build_rs_family(std::size_t n, std::size_t k, const Field& field) {
    const RSCodeSpec code = make_rs_code(n, k, field);
    const auto words = rs_codewords(code);
    std::vector<Subspace> members;
    members.reserve(words.size());
    for (const auto& c : words) {
        std::vector<Vec> gens;
        for (std::size_t j = 1; j <= k; ++j) {
            Vec v(n, 0);
            v[j - 1] = 1;
            const Vec g = gamma_map(code, j, c);
            std::copy(g.begin(), g.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
            v[n - 1] = h_func(code, j, c);
            gens.push_back(std::move(v));
        }
        members.push_back(Subspace::from_generators(field, n, gens));
    }
    return Family(field, n, k, std::move(members));
}

Matrix vandermonde(const Field& field, std::size_t rows, std::span<const Elem> nodes) {
    Matrix out(field, rows, nodes.size());
    for (std::size_t c = 0; c < nodes.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) out(r, c) = field.pow(nodes[c], r);
    return out;
}

Family build_code_based_family(const Matrix& parity_check, std::size_t k) {
    if (k < 1) throw ParameterError("k must be positive");
    const Field& f = parity_check.field();
    const std::size_t n = parity_check.rows();
    const std::size_t groups = parity_check.cols() / k;
    std::vector<Subspace> members;
    members.reserve(groups);
    for (std::size_t g = 0; g < groups; ++g) {
        std::vector<Vec> cols;
        for (std::size_t c = g * k; c < (g + 1) * k; ++c) {
            Vec v(n);
            for (std::size_t r = 0; r < n; ++r) v[r] = parity_check(r, c);
            cols.push_back(std::move(v));
        }
        Subspace s = [&] {
            try {
                return Subspace::from_generators(f, n, cols);
            } catch (const ParameterError&) {
                throw ParameterError("column group " + std::to_string(g) + " is linearly dependent");
            }
        }();
        if (s.dim() != k) throw ParameterError("column group " + std::to_string(g) + " is linearly dependent");
        members.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (members[i] == members[j])
                throw ParameterError("column groups " + std::to_string(i) + " and " + std::to_string(j) +
                                     " span the same subspace; not a partial spread");
    return Family(f, n, k, std::move(members));
}

Subspace random_subspace(const Field& field, std::size_t n, std::size_t k, Rng& rng) {
    const std::uint64_t q = field.q();
    while (true) {
        Matrix m(field, k, n);
        for (auto& e : m.data()) e = static_cast<Elem>(rng.below(q));
        if (rank(m) == k) return Subspace::from_matrix(m);
    }
}

RandomBuildResult build_random_family(const Field& field, const RandomBuildOptions& opts) {
    const std::size_t n = opts.n, k = opts.k;
    const std::uint64_t M = random_sample_size(n, k, opts.L, field.q());
    if (M < 1) throw ParameterError("sample size M < 1 for these parameters");
    if (M > guards::enumeration()) throw GuardError("sample size " + std::to_string(M) + " exceeds guard");

    Rng rng(opts.seed);
    std::vector<Subspace> sampled;
    sampled.reserve(M);
    for (std::uint64_t i = 0; i < M; ++i) sampled.push_back(random_subspace(field, n, k, rng));

    std::vector<Subspace> kept;
    for (auto& s : sampled) {
        bool clash = false;
        for (const auto& t : kept)
            if (!trivially_intersects(s, t)) {
                clash = true;
                break;
            }
        if (!clash) kept.push_back(std::move(s));
    }

    RandomBuildResult out{Family(field, n, k, std::move(kept)), M};
    out.removed_for_spread = M - out.family.size();
    while (true) {
        const AsResult as = compute_L_as(out.family, opts.verify);
        out.final_L_as = as.L;
        if (as.L <= opts.L) {
            out.converged = true;
            break;
        }
        if (out.rounds >= opts.max_rounds) break;
        // Drop the last member the witness meets.
        std::size_t victim = out.family.size();
        for (std::size_t j = out.family.size(); j-- > 0;)
            if (!trivially_intersects(*as.witness, out.family[j])) {
                victim = j;
                break;
            }
        out.family = out.family.without(victim);
        ++out.removed_for_as;
        ++out.rounds;
    }
    return out;
}

double growth_diagnostic(const Family& f) {
    if (f.size() == 0) throw ParameterError("growth diagnostic needs a non-empty family");
    const double v = std::log(static_cast<double>(f.size())) / std::log(static_cast<double>(f.field().q()));
    return std::round(v * 1e6) / 1e6;
}

}  // namespace subspace_forge
