#pragma once

#include <cstdint>
#include <optional>

namespace subspace_forge {

/// Exact rational with positive denominator, always in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// floor(1 + L (q^{n-k} - 1) / (q^k - 1)): the largest possible size of an
/// AAD family with parameter L. Requires 2k < n.
std::uint64_t bound_theorem1(std::uint64_t n, std::uint64_t k, std::uint64_t L, std::uint64_t q);

/// Same bound when the partial-spread requirement is dropped:
/// floor(L (q^{n-k} - 1) / (q^k - 1)) + L + 1.
std::uint64_t bound_theorem1_no_spread(std::uint64_t n, std::uint64_t k, std::uint64_t L, std::uint64_t q);

/// (|F| - 1)(q^k - 1) <= L (q^{n-k} - 1), compared exactly.
bool satisfies_theorem1(std::uint64_t family_size, std::uint64_t n, std::uint64_t k, std::uint64_t L,
                        std::uint64_t q);

/// Exponent n - 2k - (n-k)(k+1)/(L+1) of the random-construction size.
Rational random_lower_exponent(std::uint64_t n, std::uint64_t k, std::uint64_t L);

/// floor(q^e) for the exponent above; 0 when e < 0.
std::uint64_t random_sample_size(std::uint64_t n, std::uint64_t k, std::uint64_t L, std::uint64_t q);

/// Guaranteed AAD parameter of the Reed-Solomon family: n-1 for k = 1,
/// 1 + 2(n-2)(2n-5) for k = 2. Throws ParameterError for other k.
std::uint64_t theorem3_L(std::uint64_t n, std::uint64_t k);

struct BoundsTable {
    std::uint64_t thm1_upper;
    std::uint64_t thm1_no_spread;
    Rational random_lower_exponent;
    std::uint64_t random_sample_size;
    std::optional<std::uint64_t> theorem3_L;
};

BoundsTable bounds_table(std::uint64_t n, std::uint64_t k, std::uint64_t L, std::uint64_t q);

}  // namespace subspace_forge
