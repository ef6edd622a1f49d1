#include <doctest.h>

#include <set>

#include "subspace_forge/errors.hpp"
#include "subspace_forge/gf.hpp"

using namespace subspace_forge;

namespace {

// Order of a in (Z/p)^* by repeated multiplication.
std::uint64_t order_mod_p(std::uint64_t a, std::uint64_t p) {
    std::uint64_t x = a % p, k = 1;
    while (x != 1) {
        x = x * a % p;
        ++k;
    }
    return k;
}

// Smallest primitive root mod p by exhaustive order test.
std::uint64_t smallest_primitive_root(std::uint64_t p) {
    for (std::uint64_t g = 1; g < p; ++g)
        if (order_mod_p(g, p) == p - 1) return g;
    return 0;
}

}  // namespace

TEST_CASE("make_field picks the smallest primitive element of a prime field") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 23u}) {
        const auto f = Field::make(p, 1);
        CHECK(f.q() == p);
        CHECK(f.gamma() == smallest_primitive_root(p));
    }
    CHECK(Field::make(5, 1).gamma() == 2);
    CHECK(Field::make(7, 1).gamma() == 3);
}

TEST_CASE("GF(4) uses x^2+x+1 with gamma = x") {
    const auto f = Field::make(2, 2);
    CHECK(f.q() == 4);
    CHECK(f.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(f.gamma() == 2);
    CHECK(f.mul(2, 2) == 3);  // x * x = x + 1
}

TEST_CASE("modulus is the smallest irreducible in low-degree-first order") {
    // Cubics and quadratics are irreducible iff they have no root; scan
    // candidates in the same order and take the first rootless one.
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::uint32_t m : {2u, 3u}) {
            std::vector<std::uint32_t> expect;
            std::vector<std::uint32_t> low(m, 0);
            bool found = false;
            while (!found) {
                bool has_root = false;
                for (std::uint64_t x = 0; x < p && !has_root; ++x) {
                    std::uint64_t acc = 0, xp = 1;
                    for (std::uint32_t i = 0; i < m; ++i) {
                        acc = (acc + low[i] * xp) % p;
                        xp = xp * x % p;
                    }
                    acc = (acc + xp) % p;
                    has_root = acc == 0;
                }
                if (!has_root) {
                    expect = low;
                    expect.push_back(1);
                    found = true;
                    break;
                }
                std::size_t i = m;
                while (i > 0) {
                    --i;
                    if (++low[i] < p) break;
                    low[i] = 0;
                }
            }
            CAPTURE(p);
            CAPTURE(m);
            CHECK(Field::make(p, m).modulus() == expect);
        }
    }
    CHECK(Field::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
}

TEST_CASE("basic arithmetic") {
    const auto f5 = Field::make(5, 1);
    CHECK(f5.mul(2, 3) == 1);
    CHECK(f5.add(4, 3) == 2);
    CHECK(f5.sub(1, 3) == 3);
    CHECK(f5.neg(0) == 0);
    CHECK(f5.inv(2) == 3);
    CHECK(f5.pow(0, 0) == 1);
    CHECK(f5.pow(0, 3) == 0);
    CHECK_THROWS_AS(f5.inv(0), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64}) {
        const auto f = Field::of_order(q);
        CAPTURE(q);
        REQUIRE(f.q() == q);
        CHECK(f.pow(f.gamma(), q - 1) == 1);
        std::set<Elem> powers;
        for (std::uint64_t i = 0; i < q - 1; ++i) powers.insert(f.pow(f.gamma(), i));
        CHECK(powers.size() == q - 1);
        bool ok = true;
        for (Elem a = 0; a < q; ++a) {
            ok &= f.add(a, 0) == a && f.mul(a, 1) == a && f.add(a, f.neg(a)) == 0;
            if (a != 0) ok &= f.mul(a, f.inv(a)) == 1;
            for (Elem b = 0; b < q; ++b) {
                ok &= f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                for (Elem c = 0; c < q; ++c) ok &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("large extension fields use digit addition") {
    const auto f = Field::make(2, 10);  // q = 1024, no add table
    CHECK(f.q() == 1024);
    CHECK(f.order(f.gamma()) == 1023);
    for (Elem a : {0u, 1u, 77u, 1023u})
        for (Elem b : {0u, 5u, 512u, 1023u}) CHECK(f.add(a, b) == (a ^ b));
    const auto g = Field::make(3, 7);  // q = 2187
    CHECK(g.add(g.neg(1234), 1234) == 0);
}

TEST_CASE("elements are codes 0..q-1") {
    CHECK(Field::make(3, 1).elements() == std::vector<Elem>{0, 1, 2});
    CHECK(Field::make(2, 2).elements() == std::vector<Elem>{0, 1, 2, 3});
    CHECK(Field::make(3, 2).elements().size() == 9);
}

TEST_CASE("make_field is deterministic") {
    const auto a = Field::make(3, 3);
    const auto b = Field::make(3, 3);
    CHECK(a == b);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.gamma() == b.gamma());
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS(Field::make(4, 1), ParameterError);
    CHECK_THROWS_AS(Field::make(1, 1), ParameterError);
    CHECK_THROWS_AS(Field::make(2, 0), ParameterError);
    CHECK_THROWS_AS(Field::make(2, 21), GuardError);
    CHECK_THROWS_AS(Field::make(3, 2, 8), GuardError);
    CHECK_THROWS_AS(Field::of_order(12), ParameterError);
    CHECK_THROWS_AS(Field::of_order(1), ParameterError);
    CHECK(Field::of_order(8) == Field::make(2, 3));
}

TEST_CASE("from_parts validates modulus and gamma") {
    CHECK(Field::from_parts(2, 2, {1, 1, 1}, 2) == Field::make(2, 2));
    CHECK(Field::from_parts(5, 1, {0, 1}, 3).gamma() == 3);                  // 3 is also primitive mod 5
    CHECK_THROWS_AS(Field::from_parts(5, 1, {0, 1}, 4), ParameterError);     // order 2
    CHECK_THROWS_AS(Field::from_parts(2, 2, {1, 0, 1}, 2), ParameterError);  // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(Field::from_parts(2, 2, {1, 1}, 2), ParameterError);
    // A different irreducible cubic gives a different (but valid) field.
    const auto alt = Field::from_parts(2, 3, {1, 1, 0, 1}, 2);
    CHECK_FALSE(alt == Field::make(2, 3));
}
