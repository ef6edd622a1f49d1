#include "subspace_forge/batch.hpp"

#include <algorithm>
#include <string>

#include "subspace_forge/errors.hpp"

namespace subspace_forge {

BatchCode::BatchCode(Family family, const VerifyOptions& opts) : family_(std::move(family)) {
    const std::uint64_t q = family_.field().q();
    K_ = pow_or_throw(q, family_.ambient(), "q^n");
    if (K_ > opts.enumeration_guard) throw GuardError("batch code with K=" + std::to_string(K_) + " exceeds guard");
    L_ = compute_L_aad(family_, opts).L;
    cosets_per_member_ = pow_or_throw(q, family_.ambient() - family_.dim(), "q^(n-k)");
    for (const auto& s : family_.members()) {
        indexers_.emplace_back(s);
        auto pts = s.points();
        pts.erase(pts.begin());
        directions_.push_back(std::move(pts));
    }
}

std::uint64_t BatchCode::s() const noexcept { return family_.size() / std::max<std::uint64_t>(L_, 1); }

std::uint64_t BatchCode::point_index(std::span<const Elem> v) const {
    const std::uint64_t q = family_.field().q();
    std::uint64_t idx = 0;
    for (auto e : v) idx = idx * q + e;
    return idx;
}

Vec BatchCode::point(std::uint64_t index) const {
    if (index >= K_) throw ParameterError("information index out of range");
    const std::uint64_t q = family_.field().q();
    Vec v(family_.ambient(), 0);
    for (std::size_t c = v.size(); c-- > 0;) {
        v[c] = static_cast<Elem>(index % q);
        index /= q;
    }
    return v;
}

std::uint64_t BatchCode::parity_position(std::size_t member, std::uint64_t coset) const {
    return K_ + member * cosets_per_member_ + coset;
}

std::uint64_t BatchCode::parity_through(std::size_t member, std::uint64_t idx) const {
    return parity_position(member, indexers_.at(member).index(point(idx)));
}

Bits encode(const BatchCode& code, std::span<const std::uint8_t> x) {
    if (x.size() != code.K())
        throw ParameterError("message has " + std::to_string(x.size()) + " bits, expected " + std::to_string(code.K()));
    Bits y(code.N(), 0);
    for (std::uint64_t i = 0; i < code.K(); ++i) {
        if (x[i] > 1) throw ParameterError("message entries must be bits");
        y[i] = x[i];
        if (x[i] == 0) continue;
        for (std::size_t m = 0; m < code.family().size(); ++m) y[code.parity_through(m, i)] ^= 1;
    }
    return y;
}

std::uint8_t recover(const RecoverySet& set, std::span<const std::uint8_t> y) {
    std::uint8_t acc = 0;
    for (auto p : set.positions) acc ^= y[p];
    return acc;
}

std::vector<RecoverySet> recovery_sets_for(const BatchCode& code, std::uint64_t idx) {
    if (idx >= code.K()) throw ParameterError("information index out of range");
    const Field& f = code.family().field();
    const Vec base = code.point(idx);
    std::vector<RecoverySet> out;
    out.push_back({{idx}, std::nullopt});
    for (std::size_t m = 0; m < code.family().size(); ++m) {
        RecoverySet set{{code.parity_through(m, idx)}, m};
        for (const auto& d : code.directions(m)) {
            Vec v(base.size());
            for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.add(base[c], d[c]);
            set.positions.push_back(code.point_index(v));
        }
        std::sort(set.positions.begin(), set.positions.end());
        out.push_back(std::move(set));
    }
    return out;
}

namespace {

class Planner {
public:
    Planner(const BatchCode& code, const std::vector<std::uint64_t>& requests) : used_(code.N(), false) {
        for (auto r : requests) options_.push_back(recovery_sets_for(code, r));
        chosen_.resize(requests.size());
    }

    bool solve(std::size_t i = 0) {
        if (i == options_.size()) return true;
        for (std::size_t c = 0; c < options_[i].size(); ++c) {
            const auto& set = options_[i][c];
            if (std::any_of(set.positions.begin(), set.positions.end(), [&](auto p) { return used_[p]; })) continue;
            for (auto p : set.positions) used_[p] = true;
            chosen_[i] = c;
            if (solve(i + 1)) return true;
            for (auto p : set.positions) used_[p] = false;
        }
        return false;
    }

    std::vector<RecoverySet> chosen() const {
        std::vector<RecoverySet> out;
        for (std::size_t i = 0; i < options_.size(); ++i) out.push_back(options_[i][chosen_[i]]);
        return out;
    }

private:
    std::vector<bool> used_;
    std::vector<std::vector<RecoverySet>> options_;
    std::vector<std::size_t> chosen_;
};

std::uint64_t multiset_count(std::uint64_t K, std::uint64_t s) {
    // C(K + s - 1, s), built up as an exact product of binomials.
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= s; ++i) {
        acc = acc * (K - 1 + i) / i;
        if (acc > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::optional<RecoveryPlan> plan_recovery(const BatchCode& code, std::vector<std::uint64_t> requests) {
    std::sort(requests.begin(), requests.end());
    Planner planner(code, requests);
    if (!planner.solve()) return std::nullopt;
    return RecoveryPlan{std::move(requests), planner.chosen()};
}

BatchVerification verify_batch(const BatchCode& code, std::uint64_t s, BatchMode mode, std::uint64_t trials,
                               std::uint64_t seed) {
    if (s < 1) throw ParameterError("batch size s must be at least 1");
    BatchVerification out;
    const auto check = [&](const std::vector<std::uint64_t>& req) {
        ++out.checked;
        if (plan_recovery(code, req)) return true;
        out.ok = false;
        out.counterexample = req;
        return false;
    };

    if (mode == BatchMode::sampled) {
        Rng rng(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            std::vector<std::uint64_t> req(s);
            for (auto& r : req) r = rng.below(code.K());
            std::sort(req.begin(), req.end());
            if (!check(req)) break;
        }
        return out;
    }

    const std::uint64_t total = multiset_count(code.K(), s);
    if (total > guards::enumeration())
        throw GuardError("exhaustive batch check needs " + std::to_string(total) + " multisets, above guard");
    std::vector<std::uint64_t> req(s, 0);
    while (true) {
        if (!check(req)) break;
        // Next non-decreasing sequence.
        std::size_t i = s;
        while (i > 0 && req[i - 1] == code.K() - 1) --i;
        if (i == 0) break;
        const std::uint64_t v = req[i - 1] + 1;
        for (std::size_t j = i - 1; j < s; ++j) req[j] = v;
    }
    return out;
}

}  // namespace subspace_forge
