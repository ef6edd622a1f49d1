#include "subspace_forge/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "subspace_forge/errors.hpp"
#include "subspace_forge/util.hpp"

namespace subspace_forge {

namespace poly {

namespace {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is prime, so a^(p-2).
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1u) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

Poly mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const std::uint64_t factor = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // Monic divisors of degree d: enumerate the d lower coefficients.
        Poly g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (mod(f, g, p).empty()) return false;
            std::size_t i = 0;
            while (i < d && ++g[i] == p) g[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t m) {
    Poly f(m + 1, 0);
    f[m] = 1;
    if (m == 1) return f;
    // Lexicographic in (a_0, ..., a_{m-1}) with a_0 most significant, so the
    // highest lower coefficient advances fastest.
    while (true) {
        if (is_irreducible(f, p)) return f;
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (++f[i] < p) break;
            f[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible polynomial found");
        }
    }
}

}  // namespace poly

namespace {

std::vector<std::uint32_t> to_digits(Elem a, std::uint32_t p, std::uint32_t m) {
    std::vector<std::uint32_t> d(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Elem from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    Elem out = 0;
    for (std::size_t i = d.size(); i-- > 0;) out = out * p + d[i];
    return out;
}

// Schoolbook product reduced by the modulus; only used while building tables.
Elem slow_mul(Elem a, Elem b, std::uint32_t p, std::uint32_t m, const poly::Poly& modulus) {
    if (m == 1) return static_cast<Elem>(std::uint64_t{a} * b % p);
    const auto da = to_digits(a, p, m);
    const auto db = to_digits(b, p, m);
    poly::Poly prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
    auto r = poly::mod(std::move(prod), modulus, p);
    r.resize(m, 0);
    return from_digits(r, p);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

Elem slow_pow(Elem a, std::uint64_t e, std::uint32_t p, std::uint32_t m, const poly::Poly& modulus) {
    Elem result = 1;
    for (; e > 0; e >>= 1) {
        if (e & 1u) result = slow_mul(result, a, p, m, modulus);
        a = slow_mul(a, a, p, m, modulus);
    }
    return result;
}

bool is_primitive(Elem g, std::uint32_t p, std::uint32_t m, std::uint32_t q, const poly::Poly& modulus) {
    if (g == 0) return false;
    if (q == 2) return g == 1;
    for (auto r : prime_factors(q - 1))
        if (slow_pow(g, (q - 1) / r, p, m, modulus) == 1) return false;
    return true;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t m) { return make(p, m, guards::field_size()); }

Field Field::make(std::uint32_t p, std::uint32_t m, std::uint64_t size_guard) {
    if (!is_prime(p)) throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw ParameterError("extension degree must be at least 1");
    const auto q = checked_pow(p, m);
    if (!q || *q > size_guard)
        throw GuardError("field size " + std::to_string(p) + "^" + std::to_string(m) + " exceeds guard " +
                         std::to_string(size_guard));
    auto modulus = poly::smallest_irreducible(p, m);
    Elem gamma = 1;
    while (!is_primitive(gamma, p, m, static_cast<std::uint32_t>(*q), modulus)) ++gamma;
    return build(p, m, std::move(modulus), gamma);
}

Field Field::of_order(std::uint64_t q) {
    if (q < 2) throw ParameterError("field order " + std::to_string(q) + " is not a prime power");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t m = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw ParameterError("field order " + std::to_string(q) + " is not a prime power");
    if (q > guards::field_size()) throw GuardError("field size " + std::to_string(q) + " exceeds guard");
    return make(static_cast<std::uint32_t>(p), m);
}

Field Field::from_parts(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus, Elem gamma) {
    if (!is_prime(p)) throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw ParameterError("extension degree must be at least 1");
    const auto q = checked_pow(p, m);
    if (!q || *q > guards::field_size()) throw GuardError("field size exceeds guard");
    if (m == 1) {
        modulus = {0, 1};
    } else {
        if (modulus.size() != m + 1 || modulus.back() != 1)
            throw ParameterError("modulus must be monic of degree m");
        for (auto c : modulus)
            if (c >= p) throw ParameterError("modulus coefficient out of range");
        if (!poly::is_irreducible(modulus, p)) throw ParameterError("modulus is not irreducible");
    }
    if (gamma >= *q || !is_primitive(gamma, p, m, static_cast<std::uint32_t>(*q), modulus))
        throw ParameterError("gamma is not a primitive element");
    return build(p, m, std::move(modulus), gamma);
}

Field Field::build(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus, Elem gamma) {
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = static_cast<std::uint32_t>(*checked_pow(p, m));
    impl->modulus = std::move(modulus);
    impl->gamma = gamma;
    const std::uint32_t q = impl->q;

    impl->neg_table.resize(q);
    for (Elem a = 0; a < q; ++a) {
        auto d = to_digits(a, p, m);
        for (auto& x : d) x = (p - x) % p;
        impl->neg_table[a] = from_digits(d, p);
    }

    impl->exp_table.resize(2 * std::size_t{q - 1});
    impl->log_table.assign(q, 0);
    Elem cur = 1;
    for (std::uint32_t e = 0; e < q - 1; ++e) {
        impl->exp_table[e] = cur;
        impl->exp_table[e + q - 1] = cur;
        impl->log_table[cur] = e;
        cur = slow_mul(cur, gamma, p, m, impl->modulus);
    }

    Field f(impl);
    if (m > 1 && q <= 256) {
        impl->add_table.resize(std::size_t{q} * q);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) impl->add_table[a * q + b] = f.add_digits(a, b);
    }
    return f;
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
    const std::uint32_t p = impl_->p;
    Elem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < impl_->m; ++i) {
        const std::uint32_t s = a % p + b % p;
        out += (s >= p ? s - p : s) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return out;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t l = impl_->log_table[a];
    return impl_->exp_table[(impl_->q - 1 - l) % (impl_->q - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t l = impl_->log_table[a];
    return impl_->exp_table[(l * (e % (impl_->q - 1))) % (impl_->q - 1)];
}

Elem Field::gamma_pow(std::int64_t e) const noexcept {
    const std::int64_t n = impl_->q - 1;
    std::int64_t r = e % n;
    if (r < 0) r += n;
    return impl_->exp_table[static_cast<std::size_t>(r)];
}

std::uint64_t Field::order(Elem a) const {
    if (a == 0) throw std::domain_error("order of zero");
    std::uint64_t k = 1;
    for (Elem x = a; x != 1; x = mul(x, a)) ++k;
    return k;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(impl_->q);
    for (Elem a = 0; a < impl_->q; ++a) out[a] = a;
    return out;
}

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.impl_ == b.impl_) return true;
    return a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus() && a.gamma() == b.gamma();
}

}  // namespace subspace_forge
