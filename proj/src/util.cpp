#include "subspace_forge/util.hpp"

#include <cstdlib>
#include <string>

#include "subspace_forge/errors.hpp"

namespace subspace_forge {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
    return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        auto next = checked_mul(acc, base);
        if (!next) return std::nullopt;
        acc = *next;
    }
    return acc;
}

std::uint64_t pow_or_throw(std::uint64_t base, std::uint64_t exp, const char* what) {
    auto r = checked_pow(base, exp);
    if (!r) throw ParameterError(std::string(what) + " overflows 64 bits");
    return *r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
}

unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace guards {

std::optional<std::uint64_t> env_override() {
    const char* raw = std::getenv("SUBSPACE_FORGE_GUARD");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) return std::nullopt;
    return static_cast<std::uint64_t>(v);
}

std::uint64_t field_size() { return env_override().value_or(kDefaultFieldSize); }
std::uint64_t enumeration() { return env_override().value_or(kDefaultEnumeration); }

}  // namespace guards

}  // namespace subspace_forge
