#include <doctest.h>

#include <random>
#include <set>

#include "subspace_forge/batch.hpp"
#include "subspace_forge/constructions.hpp"
#include "subspace_forge/errors.hpp"

using namespace subspace_forge;

namespace {

Family four_lines() {
    const auto f = Field::make(2, 1);
    std::vector<Subspace> m;
    for (Vec v : {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}, Vec{1, 1, 1}}) m.push_back(Subspace::from_generators(f, 3, {v}));
    return Family(f, 3, 1, m);
}

}  // namespace

TEST_CASE("batch code parameters") {
    const BatchCode code(four_lines());
    CHECK(code.K() == 8);
    CHECK(code.N() == 24);
    CHECK(code.L() == 1);
    CHECK(code.s() == 4);
    CHECK(code.cosets_per_member() == 4);
    for (std::uint64_t i = 0; i < code.K(); ++i) CHECK(code.point_index(code.point(i)) == i);
    CHECK(code.point(5) == Vec{1, 0, 1});
    CHECK(code.parity_position(2, 3) == 8 + 2 * 4 + 3);

    const auto f = Field::make(2, 1);
    const Family single(f, 3, 1, {Subspace::from_generators(f, 3, {{1, 0, 0}})});
    const BatchCode one(single);
    CHECK(one.L() == 0);
    CHECK(one.s() == 1);
}

TEST_CASE("encode") {
    const BatchCode code(four_lines());
    const Bits zero(8, 0);
    CHECK(encode(code, zero) == Bits(24, 0));
    for (std::uint64_t i = 0; i < 8; ++i) {
        Bits x(8, 0);
        x[i] = 1;
        const auto y = encode(code, x);
        CHECK(std::count(y.begin() + 8, y.end(), 1) == 4);
        for (std::size_t m = 0; m < 4; ++m) CHECK(y[code.parity_through(m, i)] == 1);
    }
    CHECK_THROWS_AS(encode(code, Bits(7, 0)), ParameterError);
    Bits bad(8, 0);
    bad[3] = 2;
    CHECK_THROWS_AS(encode(code, bad), ParameterError);
}

TEST_CASE("recovery sets") {
    const BatchCode code(four_lines());
    const auto sets = recovery_sets_for(code, 0);
    REQUIRE(sets.size() == 5);
    CHECK(sets[0].positions == std::vector<std::uint64_t>{0});
    CHECK_FALSE(sets[0].member);
    std::set<std::uint64_t> seen;
    for (std::size_t i = 1; i < sets.size(); ++i) {
        CHECK(sets[i].positions.size() == 2);
        CHECK(sets[i].member == i - 1);
        for (auto p : sets[i].positions) CHECK(seen.insert(p).second);
    }
    CHECK_THROWS_AS(recovery_sets_for(code, 8), ParameterError);
}

TEST_CASE("every recovery set decodes its bit") {
    const auto fam = build_rs_family(3, 1, Field::make(3, 1));
    const BatchCode code(fam);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        Bits x(code.K());
        for (auto& b : x) b = rng() & 1;
        const auto y = encode(code, x);
        const std::uint64_t idx = rng() % code.K();
        for (const auto& set : recovery_sets_for(code, idx)) REQUIRE(recover(set, y) == x[idx]);
    }
}

TEST_CASE("plans are disjoint and serve their requests") {
    const BatchCode code(four_lines());
    const auto plan = plan_recovery(code, {3, 3, 5, 0});
    REQUIRE(plan);
    CHECK(plan->requests == std::vector<std::uint64_t>{0, 3, 3, 5});
    std::set<std::uint64_t> used;
    for (const auto& s : plan->sets)
        for (auto p : s.positions) CHECK(used.insert(p).second);

    Bits x{1, 0, 1, 1, 0, 0, 1, 0};
    const auto y = encode(code, x);
    for (std::size_t i = 0; i < plan->requests.size(); ++i) CHECK(recover(plan->sets[i], y) == x[plan->requests[i]]);

    // Five copies of one bit exceed the 1 + |F| available sets only at six.
    CHECK(plan_recovery(code, {2, 2, 2, 2, 2}));
    CHECK_FALSE(plan_recovery(code, {2, 2, 2, 2, 2, 2}));
}

TEST_CASE("verify_batch") {
    const BatchCode code(four_lines());
    const auto ex = verify_batch(code, 4, BatchMode::exhaustive);
    CHECK(ex.ok);
    CHECK(ex.checked == 330);
    CHECK_FALSE(ex.counterexample);
    CHECK(verify_batch(code, 1, BatchMode::exhaustive).ok);
    CHECK(verify_batch(code, 3, BatchMode::exhaustive).ok);
    const auto sampled = verify_batch(code, 4, BatchMode::sampled, 200, 3);
    CHECK(sampled.ok);
    CHECK(sampled.checked == 200);

    const auto big = verify_batch(code, 6, BatchMode::exhaustive);
    CHECK_FALSE(big.ok);
    REQUIRE(big.counterexample);
    CHECK(big.counterexample->size() == 6);
    CHECK_FALSE(plan_recovery(code, *big.counterexample));

    CHECK_THROWS_AS(verify_batch(code, 0, BatchMode::exhaustive), ParameterError);
}

TEST_CASE("s = 1 always works") {
    const auto fam = build_rs_family(3, 1, Field::make(3, 1));
    CHECK(verify_batch(BatchCode(fam), 1, BatchMode::exhaustive).ok);
}
