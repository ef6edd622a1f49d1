#include "subspace_forge/bounds.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "subspace_forge/errors.hpp"
#include "subspace_forge/util.hpp"

namespace subspace_forge {

namespace {

using u128 = unsigned __int128;

void require_params(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
    if (k < 1 || 2 * k >= n) throw ParameterError("bounds require 1 <= k and 2k < n");
    if (q < 2) throw ParameterError("field size must be at least 2");
}

std::uint64_t narrow(u128 v) {
    if (v > UINT64_MAX) throw ParameterError("bound overflows 64 bits");
    return static_cast<std::uint64_t>(v);
}

// Saturating base^exp in 128 bits; returns nullopt past 2^127.
std::optional<u128> wide_pow(std::uint64_t base, std::uint64_t exp) {
    u128 acc = 1;
    const u128 limit = u128{1} << 126;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && acc > limit / base) return std::nullopt;
        acc *= base;
    }
    return acc;
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ParameterError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

std::uint64_t bound_theorem1(std::uint64_t n, std::uint64_t k, std::uint64_t L, std::uint64_t q) {
    require_params(n, k, q);
    const u128 top = pow_or_throw(q, n - k, "q^(n-k)") - 1;
    const u128 bottom = pow_or_throw(q, k, "q^k") - 1;
    return narrow(1 + u128{L} * top / bottom);
}

std::uint64_t bound_theorem1_no_spread(std::uint64_t n, std::uint64_t k, std::uint64_t L, std::uint64_t q) {
    require_params(n, k, q);
    const u128 top = pow_or_throw(q, n - k, "q^(n-k)") - 1;
    const u128 bottom = pow_or_throw(q, k, "q^k") - 1;
    return narrow(u128{L} * top / bottom + L + 1);
}

bool satisfies_theorem1(std::uint64_t family_size, std::uint64_t n, std::uint64_t k, std::uint64_t L,
                        std::uint64_t q) {
    require_params(n, k, q);
    if (family_size == 0) return true;
    const u128 top = pow_or_throw(q, n - k, "q^(n-k)") - 1;
    const u128 bottom = pow_or_throw(q, k, "q^k") - 1;
    return u128{family_size - 1} * bottom <= u128{L} * top;
}

Rational random_lower_exponent(std::uint64_t n, std::uint64_t k, std::uint64_t L) {
    if (k < 1 || 2 * k >= n) throw ParameterError("bounds require 1 <= k and 2k < n");
    const auto ln = static_cast<std::int64_t>(n), lk = static_cast<std::int64_t>(k),
               lL = static_cast<std::int64_t>(L);
    // (n - 2k) - (n-k)(k+1)/(L+1) over the common denominator L+1.
    return Rational::make((ln - 2 * lk) * (lL + 1) - (ln - lk) * (lk + 1), lL + 1);
}

std::uint64_t random_sample_size(std::uint64_t n, std::uint64_t k, std::uint64_t L, std::uint64_t q) {
    require_params(n, k, q);
    const Rational e = random_lower_exponent(n, k, L);
    if (e.num < 0) return 0;
    // Largest M with M^den <= q^num, starting from a floating estimate.
    const auto target = wide_pow(q, static_cast<std::uint64_t>(e.num));
    if (!target) throw ParameterError("random sample size overflows");
    const auto fits = [&](std::uint64_t m) {
        const auto v = wide_pow(m, static_cast<std::uint64_t>(e.den));
        return v && *v <= *target;
    };
    auto m = static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(q), e.value())));
    while (m > 0 && !fits(m)) --m;
    while (fits(m + 1)) ++m;
    return m;
}

std::uint64_t theorem3_L(std::uint64_t n, std::uint64_t k) {
    if (k == 1) return n - 1;
    if (k == 2) {
        if (n < 5) throw ParameterError("k = 2 requires n >= 5");
        return 1 + 2 * (n - 2) * (2 * n - 5);
    }
    throw ParameterError("no guaranteed L for k = " + std::to_string(k) + " (only k = 1, 2)");
}

BoundsTable bounds_table(std::uint64_t n, std::uint64_t k, std::uint64_t L, std::uint64_t q) {
    BoundsTable t{bound_theorem1(n, k, L, q), bound_theorem1_no_spread(n, k, L, q), random_lower_exponent(n, k, L),
                  random_sample_size(n, k, L, q), std::nullopt};
    if (k == 1 || k == 2) t.theorem3_L = theorem3_L(n, k);
    return t;
}

}  // namespace subspace_forge
