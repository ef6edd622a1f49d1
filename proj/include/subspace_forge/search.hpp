#pragma once

#include <cstdint>
#include <optional>

#include "subspace_forge/family.hpp"

namespace subspace_forge {

enum class SearchMode { exhaustive, greedy };

struct SearchConfig {
    Field field;
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t L = 0;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t node_budget = 10'000'000;
    bool symmetry_break = true;
};

struct SearchResult {
    std::uint64_t size = 0;
    Family family;
    bool optimality_proven = false;
    std::uint64_t nodes = 0;
    std::uint64_t bound = 0;  // bound_theorem1(n, k, L, q)
};

/// Branch and bound over all k-subspaces in enumeration order, keeping only
/// partial spreads with L_aad <= L. Throws ParameterError when the number of
/// k-subspaces exceeds guards::kDefaultSearchCandidates (or the env guard).
SearchResult exhaustive_max_family(const SearchConfig& cfg);

/// Random-order greedy insertion; deterministic per seed.
Family greedy_max_family(const SearchConfig& cfg, std::uint64_t seed);

}  // namespace subspace_forge
