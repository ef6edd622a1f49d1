#include "subspace_forge/search.hpp"

#include <numeric>
#include <string>

#include "subspace_forge/bounds.hpp"
#include "subspace_forge/errors.hpp"

namespace subspace_forge {

namespace {

std::vector<Subspace> all_candidates(const SearchConfig& cfg) {
    if (cfg.k < 1 || 2 * cfg.k >= cfg.n) throw ParameterError("search requires 1 <= k and 2k < n");
    const SubspaceEnumerator all(cfg.field, cfg.n, cfg.k);
    const std::uint64_t limit = guards::env_override().value_or(guards::kDefaultSearchCandidates);
    if (all.count() > limit)
        throw ParameterError("search space has " + std::to_string(all.count()) + " subspaces, above " +
                             std::to_string(limit));
    return {all.begin(), all.end()};
}

class BranchAndBound {
public:
    BranchAndBound(const SearchConfig& cfg, std::vector<Subspace> candidates, std::uint64_t bound)
        : cfg_(cfg), cands_(std::move(candidates)), bound_(bound), tracker_(cfg.field, cfg.n, cfg.k, cfg.L) {}

    void run() {
        const std::size_t top_end = cfg_.symmetry_break ? std::min<std::size_t>(1, cands_.size()) : cands_.size();
        expand(0, top_end);
    }

    std::vector<Subspace> best;
    std::uint64_t nodes = 0;
    bool aborted = false;

private:
    bool finished() const { return aborted || best.size() >= bound_; }

    void expand(std::size_t start, std::size_t end) {
        if (++nodes > cfg_.node_budget) {
            aborted = true;
            return;
        }
        if (tracker_.size() > best.size()) best = tracker_.members();
        if (finished()) return;
        for (std::size_t idx = start; idx < end; ++idx) {
            if (tracker_.size() + (cands_.size() - idx) <= best.size()) break;
            if (!tracker_.try_push(cands_[idx])) continue;
            expand(idx + 1, cands_.size());
            tracker_.pop();
            if (finished()) return;
        }
    }

    const SearchConfig& cfg_;
    std::vector<Subspace> cands_;
    std::uint64_t bound_;
    AadTracker tracker_;
};

}  // namespace

SearchResult exhaustive_max_family(const SearchConfig& cfg) {
    auto cands = all_candidates(cfg);
    const std::uint64_t bound = bound_theorem1(cfg.n, cfg.k, cfg.L, cfg.field.q());
    BranchAndBound bb(cfg, std::move(cands), bound);
    bb.run();
    const std::uint64_t size = bb.best.size();
    return {size, Family(cfg.field, cfg.n, cfg.k, std::move(bb.best)), !bb.aborted, bb.nodes, bound};
}

Family greedy_max_family(const SearchConfig& cfg, std::uint64_t seed) {
    const auto cands = all_candidates(cfg);
    std::vector<std::size_t> order(cands.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    rng.shuffle(order);
    AadTracker tracker(cfg.field, cfg.n, cfg.k, cfg.L);
    for (auto idx : order) tracker.try_push(cands[idx]);
    return Family(cfg.field, cfg.n, cfg.k, tracker.members());
}

}  // namespace subspace_forge
