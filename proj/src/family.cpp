#include "subspace_forge/family.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "subspace_forge/bounds.hpp"
#include "subspace_forge/errors.hpp"

namespace subspace_forge {

namespace {

std::vector<Vec> nonzero_points(const Subspace& s) {
    auto pts = s.points();
    pts.erase(pts.begin());  // coefficient tuple 0 comes first
    return pts;
}

// Each nonzero point of S_j lies in a distinct coset of S_i when the two meet
// trivially, so bumping the coset of every point counts S_j once per coset.
void accumulate(const CosetIndexer& cosets, const std::vector<Vec>& points, std::vector<std::uint32_t>& hits,
                int delta) {
    for (const auto& v : points) hits[cosets.index(v)] += static_cast<std::uint32_t>(delta);
}

void require_spread(const Family& f) {
    const auto sc = check_partial_spread(f);
    if (!sc.is_partial_spread)
        throw ParameterError("family is not a partial spread (members " + std::to_string(sc.witness->first) +
                             " and " + std::to_string(sc.witness->second) + " intersect)");
}

// Rank of [V; S] is below dim V + dim S iff they meet non-trivially.
bool meets(const Subspace& v, const Subspace& s, std::vector<Elem>& scratch) {
    const auto& a = v.basis().entries();
    const auto& b = s.basis().entries();
    scratch.assign(a.begin(), a.end());
    scratch.insert(scratch.end(), b.begin(), b.end());
    const std::size_t rows = v.dim() + s.dim();
    return eliminate_rank(v.field(), scratch, rows, v.ambient()) < rows;
}

}  // namespace

Family::Family(Field field, std::size_t n, std::size_t k, std::vector<Subspace> members)
    : field_(std::move(field)), n_(n), k_(k), members_(std::move(members)) {
    if (k_ < 1 || 2 * k_ >= n_)
        throw ParameterError("family requires 1 <= k and 2k < n (got n=" + std::to_string(n_) +
                             ", k=" + std::to_string(k_) + ")");
    std::unordered_set<Subspace> seen;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const auto& s = members_[i];
        if (!(s.field() == field_) || s.ambient() != n_ || s.dim() != k_)
            throw ParameterError("member " + std::to_string(i) + " does not match the family parameters");
        if (!seen.insert(s).second)
            throw ParameterError("member " + std::to_string(i) + " duplicates an earlier member");
    }
}

Family Family::without(std::size_t i) const {
    auto rest = members_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    return Family(field_, n_, k_, std::move(rest));
}

SpreadCheck check_partial_spread(const Family& f) {
    std::vector<Elem> scratch;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (meets(f[i], f[j], scratch)) return {false, std::pair{i, j}};
    return {true, std::nullopt};
}

std::uint64_t coset_hits(const Family& f, std::size_t i, std::span<const Elem> u) {
    const Subspace& si = f[i];
    if (si.contains(u)) throw ParameterError("u lies in the member subspace");
    std::uint64_t count = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (j == i) continue;
        if (sum(si, f[j]).contains(u)) ++count;
    }
    return count;
}

AadResult compute_L_aad(const Family& f, const VerifyOptions& opts) {
    require_spread(f);
    const std::size_t m = f.size();
    if (m == 0) return {};
    std::vector<std::vector<Vec>> points(m);
    for (std::size_t j = 0; j < m; ++j) points[j] = nonzero_points(f[j]);

    struct Best {
        std::uint64_t L = 0;
        std::size_t member = 0;
        std::uint64_t coset = 0;
        bool set = false;
    };
    std::vector<Best> per_member(m);
    parallel_chunks(m, opts.threads, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const CosetIndexer cosets(f[i]);
            std::vector<std::uint32_t> hits(cosets.count(), 0);
            for (std::size_t j = 0; j < m; ++j)
                if (j != i) accumulate(cosets, points[j], hits, +1);
            // Coset 0 is S_i itself; it is never hit and never a valid u.
            auto it = std::max_element(hits.begin() + 1, hits.end());
            per_member[i] = {*it, i, static_cast<std::uint64_t>(it - hits.begin()), true};
        }
    });
    Best best = per_member[0];
    for (const auto& b : per_member)
        if (b.L > best.L) best = b;
    return {best.L, AadWitness{best.member, CosetIndexer(f[best.member]).rep(best.coset)}};
}

std::uint64_t as_hits(const Family& f, const Subspace& v) {
    std::vector<Elem> scratch;
    std::uint64_t count = 0;
    for (const auto& s : f.members())
        if (meets(v, s, scratch)) ++count;
    return count;
}

AsResult compute_L_as(const Family& f, const VerifyOptions& opts) {
    require_spread(f);
    if (f.size() == 0) return {};
    const SubspaceEnumerator all(f.field(), f.ambient(), f.dim() + 1);
    if (all.count() > opts.enumeration_guard)
        throw GuardError("AS verification needs " + std::to_string(all.count()) +
                         " subspaces, above the guard of " + std::to_string(opts.enumeration_guard));

    const unsigned workers = resolve_threads(opts.threads);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> best(workers, {0, 0});  // (L, index)
    parallel_chunks(all.count(), workers, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
        std::vector<Elem> scratch;
        std::pair<std::uint64_t, std::uint64_t> local{0, begin};
        bool set = false;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const Subspace v = all.at(idx);
            std::uint64_t count = 0;
            for (const auto& s : f.members())
                if (meets(v, s, scratch)) ++count;
            if (!set || count > local.first) {
                local = {count, idx};
                set = true;
            }
        }
        best[w] = local;
    });
    // Chunks are contiguous and ordered by worker id, so a strict comparison
    // keeps the smallest index among maxima.
    auto winner = best[0];
    for (const auto& b : best)
        if (b.first > winner.first) winner = b;
    return {winner.first, all.at(winner.second)};
}

bool verify_theorem1(const Family& f, std::uint64_t L) {
    return satisfies_theorem1(f.size(), f.ambient(), f.dim(), L, f.field().q());
}

RelationCheck check_relations(const Family& f, std::uint64_t L_aad, std::uint64_t L_as) {
    RelationCheck out;
    if (L_aad + 1 > L_as) {
        out.ok = false;
        out.diagnostics += "L_aad=" + std::to_string(L_aad) + " exceeds L_as-1=" + std::to_string(L_as) + "-1; ";
    }
    if (f.dim() == 1 && L_as > L_aad + 1) {
        out.ok = false;
        out.diagnostics += "k=1 but L_as=" + std::to_string(L_as) + " exceeds L_aad+1=" + std::to_string(L_aad + 1) + "; ";
    }
    return out;
}

VerificationReport verify_family(const Family& f, const Properties& props, const VerifyOptions& opts) {
    VerificationReport r;
    r.spread = check_partial_spread(f);
    if (!r.spread.is_partial_spread) return r;
    const bool need_aad = props.aad || props.thm1 || props.relations;
    const bool need_as = props.as || props.relations;
    if (need_aad) r.aad = compute_L_aad(f, opts);
    if (need_as) r.as = compute_L_as(f, opts);
    if (props.thm1) {
        r.bound_thm1 = bound_theorem1(f.ambient(), f.dim(), r.aad->L, f.field().q());
        r.bound_satisfied = verify_theorem1(f, r.aad->L);
    }
    if (props.relations) r.relations = check_relations(f, r.aad->L, r.as->L);
    if (!props.aad && !props.thm1 && !props.relations) r.aad.reset();
    if (!props.as && !props.relations) r.as.reset();
    return r;
}

AadTracker::AadTracker(Field field, std::size_t n, std::size_t k, std::uint64_t L)
    : field_(std::move(field)), n_(n), k_(k), L_(L) {}

void AadTracker::apply(std::size_t i, std::size_t j, int delta) {
    accumulate(members_[i].cosets, members_[j].nonzero_points, members_[i].hits, delta);
}

bool AadTracker::try_push(const Subspace& s) {
    std::vector<Elem> scratch;
    for (const auto& e : members_)
        if (meets(e.cosets.subspace(), s, scratch)) return false;
    CosetIndexer cosets(s);
    std::vector<std::uint32_t> hits(cosets.count(), 0);
    members_.push_back({std::move(cosets), nonzero_points(s), std::move(hits)});
    const std::size_t j = members_.size() - 1;
    bool ok = true;
    for (std::size_t i = 0; i < j; ++i) {
        apply(i, j, +1);
        apply(j, i, +1);
    }
    for (const auto& e : members_) {
        if (*std::max_element(e.hits.begin(), e.hits.end()) > L_) {
            ok = false;
            break;
        }
    }
    if (!ok) pop();
    return ok;
}

void AadTracker::pop() {
    const std::size_t j = members_.size() - 1;
    for (std::size_t i = 0; i < j; ++i) apply(i, j, -1);
    members_.pop_back();
}

std::vector<Subspace> AadTracker::members() const {
    std::vector<Subspace> out;
    out.reserve(members_.size());
    for (const auto& e : members_) out.push_back(e.cosets.subspace());
    return out;
}

}  // namespace subspace_forge
