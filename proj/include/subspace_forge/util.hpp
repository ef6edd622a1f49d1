#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace subspace_forge {

/// Overflow-checked unsigned arithmetic; nullopt when the result exceeds 64 bits.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

/// Same as above but throws ParameterError naming `what` on overflow.
std::uint64_t pow_or_throw(std::uint64_t base, std::uint64_t exp, const char* what);

bool is_prime(std::uint64_t n);

/// Seeded generator. mt19937_64 output is fixed by the standard and bounded
/// draws use explicit rejection, so sequences match across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Size guards. SUBSPACE_FORGE_GUARD, when set to a positive integer,
/// overrides every default below.
namespace guards {
inline constexpr std::uint64_t kDefaultFieldSize = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultEnumeration = 5'000'000;
inline constexpr std::uint64_t kDefaultSearchCandidates = 10'000;

std::optional<std::uint64_t> env_override();
std::uint64_t field_size();
std::uint64_t enumeration();
}  // namespace guards

/// Runs fn(begin, end) over [0, count) split into contiguous chunks on up to
/// `threads` workers. threads == 0 means hardware concurrency.
template <typename Fn>
void parallel_chunks(std::uint64_t count, unsigned threads, Fn&& fn);

unsigned resolve_threads(unsigned threads);

}  // namespace subspace_forge

#include <algorithm>
#include <thread>
#include <vector>

namespace subspace_forge {

template <typename Fn>
void parallel_chunks(std::uint64_t count, unsigned threads, Fn&& fn) {
    const unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(resolve_threads(threads), count == 0 ? 1 : count));
    if (workers <= 1) {
        fn(std::uint64_t{0}, count, 0u);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::uint64_t step = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * step;
        const std::uint64_t end = std::min(count, begin + step);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
    }
}

}  // namespace subspace_forge
