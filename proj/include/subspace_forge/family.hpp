#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subspace_forge/subspace.hpp"
#include "subspace_forge/util.hpp"

namespace subspace_forge {

/// Ordered collection of distinct k-subspaces of F_q^n with 2k < n.
class Family {
public:
    /// Throws ParameterError if 2k >= n, a member has other parameters, or two
    /// members coincide.
    Family(Field field, std::size_t n, std::size_t k, std::vector<Subspace> members);

    const Field& field() const noexcept { return field_; }
    std::size_t ambient() const noexcept { return n_; }
    std::size_t dim() const noexcept { return k_; }
    std::size_t size() const noexcept { return members_.size(); }
    const std::vector<Subspace>& members() const noexcept { return members_; }
    const Subspace& operator[](std::size_t i) const { return members_.at(i); }

    /// Copy with member i removed.
    Family without(std::size_t i) const;

private:
    Field field_;
    std::size_t n_;
    std::size_t k_;
    std::vector<Subspace> members_;
};

struct SpreadCheck {
    bool is_partial_spread = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // first violating pair, i < j
};

struct AadWitness {
    std::size_t member;
    Vec u;  // canonical coset representative, u not in the member
};

struct AadResult {
    std::uint64_t L = 0;
    std::optional<AadWitness> witness;
};

struct AsResult {
    std::uint64_t L = 0;
    std::optional<Subspace> witness;  // (k+1)-dimensional
};

struct VerifyOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    std::uint64_t enumeration_guard = guards::enumeration();
};

SpreadCheck check_partial_spread(const Family& f);

/// Number of members S_j (j != i) met by u + S_i, using
/// (u + S_i) ∩ S_j != ∅  <=>  u ∈ S_i + S_j. Throws ParameterError if u ∈ S_i.
std::uint64_t coset_hits(const Family& f, std::size_t i, std::span<const Elem> u);

/// Exact AAD parameter: max of coset_hits over all members and all u outside
/// them. Throws ParameterError if f is not a partial spread.
AadResult compute_L_aad(const Family& f, const VerifyOptions& opts = {});

/// Number of members meeting V non-trivially.
std::uint64_t as_hits(const Family& f, const Subspace& v);

/// Exact AS parameter by enumerating every (k+1)-subspace. Throws
/// ParameterError if f is not a partial spread and GuardError when the
/// enumeration exceeds opts.enumeration_guard.
AsResult compute_L_as(const Family& f, const VerifyOptions& opts = {});

/// |F| <= 1 + L (q^{n-k} - 1)/(q^k - 1).
bool verify_theorem1(const Family& f, std::uint64_t L);

struct RelationCheck {
    bool ok = true;
    std::string diagnostics;
};

/// L_aad <= L_as - 1 always; for k = 1 also L_as <= L_aad + 1.
RelationCheck check_relations(const Family& f, std::uint64_t L_aad, std::uint64_t L_as);

struct Properties {
    bool spread = true;
    bool aad = true;
    bool as = true;
    bool thm1 = true;
    bool relations = true;
};

struct VerificationReport {
    SpreadCheck spread;
    std::optional<AadResult> aad;
    std::optional<AsResult> as;
    std::optional<std::uint64_t> bound_thm1;
    std::optional<bool> bound_satisfied;
    std::optional<RelationCheck> relations;
};

/// Computes the requested properties. L values are only computed for partial
/// spreads; otherwise they stay empty.
VerificationReport verify_family(const Family& f, const Properties& props = {}, const VerifyOptions& opts = {});

/// Incremental AAD feasibility: keeps per-member coset hit counters so a
/// candidate can be tested against a growing family without recomputation.
class AadTracker {
public:
    AadTracker(Field field, std::size_t n, std::size_t k, std::uint64_t L);

    /// Adds s if the family stays a partial spread with L_aad <= L.
    bool try_push(const Subspace& s);
    void pop();

    std::size_t size() const noexcept { return members_.size(); }
    std::vector<Subspace> members() const;

private:
    struct Entry {
        CosetIndexer cosets;
        std::vector<Vec> nonzero_points;
        std::vector<std::uint32_t> hits;
    };
    void apply(std::size_t i, std::size_t j, int delta);

    Field field_;
    std::size_t n_;
    std::size_t k_;
    std::uint64_t L_;
    std::vector<Entry> members_;
};

}  // namespace subspace_forge
