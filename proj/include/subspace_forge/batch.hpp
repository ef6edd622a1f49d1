#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subspace_forge/family.hpp"

namespace subspace_forge {

using Bits = std::vector<std::uint8_t>;

/// Systematic binary batch code built from an AAD family. Information bit i
/// sits at the point of F_q^n whose base-q digits (first coordinate most
/// significant) spell i. Parity bit K + member*q^{n-k} + c is the XOR of the
/// information bits on coset c (CosetIndexer order) of that member.
class BatchCode {
public:
    /// Computes L_aad of `family`. Throws ParameterError for a non-spread and
    /// GuardError when q^n exceeds the enumeration guard.
    explicit BatchCode(Family family, const VerifyOptions& opts = {});

    const Family& family() const noexcept { return family_; }
    std::uint64_t L() const noexcept { return L_; }
    std::uint64_t K() const noexcept { return K_; }
    std::uint64_t N() const noexcept { return K_ + family_.size() * cosets_per_member_; }
    std::uint64_t cosets_per_member() const noexcept { return cosets_per_member_; }
    /// floor(|F| / L), with L = 0 treated as 1.
    std::uint64_t s() const noexcept;

    std::uint64_t point_index(std::span<const Elem> v) const;
    Vec point(std::uint64_t index) const;
    std::uint64_t parity_position(std::size_t member, std::uint64_t coset) const;
    /// Parity position of the coset of `member` through information position idx.
    std::uint64_t parity_through(std::size_t member, std::uint64_t idx) const;
    const CosetIndexer& cosets(std::size_t member) const { return indexers_.at(member); }
    /// Nonzero vectors of member i.
    const std::vector<Vec>& directions(std::size_t member) const { return directions_.at(member); }

private:
    Family family_;
    std::uint64_t L_;
    std::uint64_t K_;
    std::uint64_t cosets_per_member_;
    std::vector<CosetIndexer> indexers_;
    std::vector<std::vector<Vec>> directions_;
};

/// y = (x, parities). Throws ParameterError when x has the wrong length or a
/// non-bit entry.
Bits encode(const BatchCode& code, std::span<const std::uint8_t> x);

/// XOR of the listed positions reconstructs the requested bit. A direct read
/// has a single position and no member.
struct RecoverySet {
    std::vector<std::uint64_t> positions;
    std::optional<std::size_t> member;
};

std::uint8_t recover(const RecoverySet& set, std::span<const std::uint8_t> y);

/// {idx} followed by one set per member: the parity of idx + S plus the other
/// information bits of that coset.
std::vector<RecoverySet> recovery_sets_for(const BatchCode& code, std::uint64_t idx);

struct RecoveryPlan {
    std::vector<std::uint64_t> requests;  // sorted
    std::vector<RecoverySet> sets;        // sets[i] serves requests[i]; pairwise disjoint
};

/// Pairwise disjoint recovery sets for a request multiset, or nullopt.
std::optional<RecoveryPlan> plan_recovery(const BatchCode& code, std::vector<std::uint64_t> requests);

enum class BatchMode { exhaustive, sampled };

struct BatchVerification {
    bool ok = true;
    std::uint64_t checked = 0;
    std::optional<std::vector<std::uint64_t>> counterexample;
};

/// Checks that every multiset of s requests (all of them, or `trials` random
/// ones) admits a plan. Throws ParameterError for s < 1 and GuardError when the
/// exhaustive multiset count exceeds the enumeration guard.
BatchVerification verify_batch(const BatchCode& code, std::uint64_t s, BatchMode mode, std::uint64_t trials = 1000,
                               std::uint64_t seed = 0);

}  // namespace subspace_forge
