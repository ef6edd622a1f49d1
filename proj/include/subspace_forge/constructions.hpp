#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subspace_forge/bounds.hpp"
#include "subspace_forge/family.hpp"

namespace subspace_forge {

/// The [n-k-1, n-2k, k]_q Reed-Solomon code behind the explicit construction.
/// Row t of the parity check (t = 0..k-2) is (gamma^{c t})_{c = 0..n-k-2};
/// for k = 1 the parity check is empty and the code is all of F_q^{n-2}.
struct RSCodeSpec {
    Field field;
    std::size_t n;
    std::size_t k;
    Matrix parity_check;  // (k-1) x (n-k-1)
    Matrix generator;     // canonical kernel basis of parity_check, (n-2k) x (n-k-1)

    std::size_t length() const noexcept { return n - k - 1; }
    std::size_t dimension() const noexcept { return n - 2 * k; }
};

/// Throws ParameterError unless 2k < n and q >= nk.
RSCodeSpec make_rs_code(std::size_t n, std::size_t k, const Field& field);

/// All q^{n-2k} codewords: message tuples in lexicographic order (first
/// symbol most significant) mapped through the generator.
std::vector<Vec> rs_codewords(const RSCodeSpec& code);

/// Gamma_j(x)_p = gamma^{p (j-1)} x_p, with p 1-based. j in [1, k].
Vec gamma_map(const RSCodeSpec& code, std::size_t j, std::span<const Elem> x);

/// h_j(x) = sum_p x_p^{(j-1)(n-k-1) + p + 1}, with p 1-based. j in [1, k].
Elem h_func(const RSCodeSpec& code, std::size_t j, std::span<const Elem> x);

/// Member i is spanned by (e_j | Gamma_j(c_i) | h_j(c_i)) for j = 1..k.
Family build_rs_family(std::size_t n, std::size_t k, const Field& field);

/// rows x nodes.size() matrix with column c equal to (1, a, a^2, ...) for a = nodes[c].
Matrix vandermonde(const Field& field, std::size_t rows, std::span<const Elem> nodes);

/// Groups of k consecutive columns of H, floor(cols/k) of them, each spanning
/// one member in F_q^{rows(H)}. Throws ParameterError when a group is
/// dependent or two groups span the same subspace.
Family build_code_based_family(const Matrix& parity_check, std::size_t k);

struct RandomBuildOptions {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t L = 0;
    std::uint64_t seed = 0;
    std::size_t max_rounds = 10'000;
    VerifyOptions verify;
};

struct RandomBuildResult {
    Family family;
    std::uint64_t sampled = 0;           // M
    std::size_t removed_for_spread = 0;  // duplicates and intersecting pairs
    std::size_t removed_for_as = 0;
    std::size_t rounds = 0;
    bool converged = false;  // L_as <= L reached within max_rounds
    std::uint64_t final_L_as = 0;
};

/// Samples M = floor(q^{n-2k-(n-k)(k+1)/(L+1)}) uniform k-subspaces, drops the
/// later member of every intersecting pair, then drops members hit by an AS
/// witness until L_as <= L. Throws ParameterError when M < 1.
RandomBuildResult build_random_family(const Field& field, const RandomBuildOptions& opts);

/// Uniformly random k-subspace of F_q^n (rejection over full-rank k x n
/// matrices). Exposed for testing the sampler.
Subspace random_subspace(const Field& field, std::size_t n, std::size_t k, Rng& rng);

/// log_q |F| rounded to six decimals.
double growth_diagnostic(const Family& f);

}  // namespace subspace_forge
