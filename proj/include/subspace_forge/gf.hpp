#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace subspace_forge {

/// Element of GF(p^m) packed as an integer: a_0 + a_1 x + ... + a_{m-1} x^{m-1}
/// is stored as sum a_i p^i. Code 0 is zero and code 1 is one.
using Elem = std::uint32_t;

/// An immutable finite field GF(p^m) with a fixed monic irreducible modulus and
/// a designated primitive element. Copies share the same tables.
///
/// Addition uses a full table for q <= 256 and base-p digit arithmetic above
/// that; multiplication and inversion go through exp/log tables of gamma.
class Field {
public:
    /// Smallest monic irreducible modulus (coefficients compared low degree
    /// first) and smallest-code primitive element. Throws ParameterError for a
    /// non-prime p or m == 0, GuardError when p^m exceeds `size_guard`.
    static Field make(std::uint32_t p, std::uint32_t m, std::uint64_t size_guard);
    static Field make(std::uint32_t p, std::uint32_t m);

    /// Field of order q, where q must be a prime power.
    static Field of_order(std::uint64_t q);

    /// Rebuilds a field from explicit parts, validating irreducibility of the
    /// modulus and primitivity of gamma. `modulus` holds m+1 coefficients, low
    /// degree first, leading coefficient 1 (ignored when m == 1).
    static Field from_parts(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
                            Elem gamma);

    std::uint32_t p() const noexcept { return impl_->p; }
    std::uint32_t m() const noexcept { return impl_->m; }
    std::uint32_t q() const noexcept { return impl_->q; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return impl_->modulus; }
    Elem gamma() const noexcept { return impl_->gamma; }

    bool contains(Elem a) const noexcept { return a < impl_->q; }

    Elem add(Elem a, Elem b) const noexcept {
        if (impl_->m == 1) {
            const Elem s = a + b;
            return s >= impl_->q ? s - impl_->q : s;
        }
        if (!impl_->add_table.empty()) return impl_->add_table[a * impl_->q + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept { return impl_->neg_table[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return impl_->exp_table[impl_->log_table[a] + impl_->log_table[b]];
    }
    /// Throws std::domain_error for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// a^e with 0^0 == 1.
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// gamma^e for any integer exponent (reduced mod q-1).
    Elem gamma_pow(std::int64_t e) const noexcept;

    /// Multiplicative order of a != 0.
    std::uint64_t order(Elem a) const;

    /// All q elements in increasing code order.
    std::vector<Elem> elements() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Impl {
        std::uint32_t p = 0;
        std::uint32_t m = 0;
        std::uint32_t q = 0;
        std::vector<std::uint32_t> modulus;
        Elem gamma = 0;
        std::vector<Elem> add_table;
        std::vector<Elem> neg_table;
        std::vector<Elem> exp_table;  // length 2(q-1)
        std::vector<std::uint32_t> log_table;
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    static Field build(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
                       Elem gamma);
    Elem add_digits(Elem a, Elem b) const noexcept;

    std::shared_ptr<const Impl> impl_;
};

namespace poly {

/// Polynomials over F_p as coefficient vectors, low degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

Poly mod(Poly a, const Poly& b, std::uint32_t p);
/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p);
/// Lexicographically smallest monic irreducible of degree m, coefficients
/// compared from a_0 upwards.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t m);

}  // namespace poly

}  // namespace subspace_forge
