#include <doctest.h>

#include "subspace_forge/bounds.hpp"
#include "subspace_forge/errors.hpp"
#include "subspace_forge/search.hpp"

using namespace subspace_forge;

namespace {

SearchConfig config(std::uint64_t q, std::size_t n, std::size_t k, std::uint64_t L) {
    SearchConfig cfg{Field::of_order(q)};
    cfg.n = n;
    cfg.k = k;
    cfg.L = L;
    return cfg;
}

bool feasible(const Family& f, std::uint64_t L) {
    return check_partial_spread(f).is_partial_spread && compute_L_aad(f).L <= L;
}

}  // namespace

TEST_CASE("exhaustive search at q = 2, n = 3") {
    const auto r = exhaustive_max_family(config(2, 3, 1, 1));
    CHECK(r.size == 4);
    CHECK(r.family.size() == 4);
    CHECK(r.optimality_proven);
    CHECK(r.bound == bound_theorem1(3, 1, 1, 2));
    CHECK(feasible(r.family, 1));

    const auto zero = exhaustive_max_family(config(2, 3, 1, 0));
    CHECK(zero.size == 1);
    CHECK(zero.optimality_proven);
}

TEST_CASE("symmetry breaking keeps the optimum") {
    for (std::uint64_t q : {2u, 3u}) {
        auto cfg = config(q, 3, 1, 1);
        const auto on = exhaustive_max_family(cfg);
        cfg.symmetry_break = false;
        const auto off = exhaustive_max_family(cfg);
        CHECK(on.size == off.size);
        CHECK(on.optimality_proven);
        CHECK(off.optimality_proven);
        CHECK(on.size <= on.bound);
        CHECK(feasible(on.family, 1));
        CHECK(feasible(off.family, 1));
    }
}

TEST_CASE("exhaustive optimum never exceeds the bound") {
    for (std::uint64_t L : {0u, 1u, 2u, 3u}) {
        const auto r = exhaustive_max_family(config(3, 3, 1, L));
        CHECK(r.optimality_proven);
        CHECK(r.size <= r.bound);
        CHECK(feasible(r.family, L));
    }
}

TEST_CASE("greedy search") {
    auto cfg = config(3, 3, 1, 1);
    const auto best = exhaustive_max_family(cfg).size;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto g = greedy_max_family(cfg, seed);
        CHECK(feasible(g, 1));
        CHECK(g.size() <= best);
        CHECK(g.size() >= 1);
        CHECK(greedy_max_family(cfg, seed).members() == g.members());
    }
}

TEST_CASE("budget and guard") {
    auto cfg = config(3, 4, 1, 2);
    cfg.node_budget = 5;
    const auto r = exhaustive_max_family(cfg);
    CHECK_FALSE(r.optimality_proven);
    CHECK(feasible(r.family, 2));
    CHECK(r.nodes <= 6);

    // 11^4 + ... lines in F_11^5 far exceeds the candidate guard.
    CHECK_THROWS_AS(exhaustive_max_family(config(11, 5, 1, 1)), ParameterError);
}
