#pragma once

// Shared helpers for the unit tests. The evaluators here work on plain
// integers mod p and never touch Field arithmetic, so they serve as an
// independent check on the library for prime fields.

#include <cstdint>
#include <random>
#include <vector>

#include "invforge/gf.hpp"
#include "invforge/poly.hpp"

namespace testing {

using invforge::Elem;
using invforge::FieldPtr;
using invforge::Poly;

inline constexpr std::uint64_t kSeed = 20240611;

inline std::vector<std::uint32_t> odd_prime_powers(std::uint32_t limit)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 3; q <= limit; q += 2) {
        std::uint32_t p = 2;
        while (q % p != 0) ++p;
        std::uint32_t r = q;
        while (r % p == 0) r /= p;
        if (r == 1) out.push_back(q);
    }
    return out;
}

inline std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q)
{
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t n = 0;
    for (std::uint32_t r = q; r > 1; r /= p) ++n;
    return {p, n};
}

inline FieldPtr field_q(std::uint32_t q)
{
    const auto [p, n] = prime_power(q);
    return invforge::Field::make(p, n);
}

inline Elem random_elem(const invforge::Field& F, std::mt19937_64& rng)
{
    return Elem{static_cast<std::uint32_t>(rng() % F.q())};
}

inline Elem random_unit(const invforge::Field& F, std::mt19937_64& rng)
{
    return Elem{static_cast<std::uint32_t>(1 + rng() % (F.q() - 1))};
}

/// Up to `terms` random terms of total degree <= max_degree.
inline Poly random_poly(const FieldPtr& field, std::mt19937_64& rng, std::size_t terms,
                        std::uint32_t max_degree)
{
    std::vector<invforge::Term> out;
    for (std::size_t i = 0; i < terms; ++i) {
        const auto d = static_cast<std::uint32_t>(rng() % (max_degree + 1));
        const auto e0 = static_cast<std::uint32_t>(rng() % (d + 1));
        const auto e1 = static_cast<std::uint32_t>(rng() % (d - e0 + 1));
        out.push_back({invforge::Monomial{e0, e1, d - e0 - e1}, random_elem(*field, rng)});
    }
    return Poly::from_terms(field, std::move(out));
}

inline Poly random_nonzero_poly(const FieldPtr& field, std::mt19937_64& rng, std::size_t terms,
                                std::uint32_t max_degree)
{
    for (;;) {
        Poly f = random_poly(field, rng, terms, max_degree);
        if (!f.is_zero()) return f;
    }
}

inline Poly random_homogeneous(const FieldPtr& field, std::mt19937_64& rng, std::size_t terms,
                               std::uint32_t d)
{
    std::vector<invforge::Term> out;
    for (std::size_t i = 0; i < terms; ++i) {
        const auto e0 = static_cast<std::uint32_t>(rng() % (d + 1));
        const auto e1 = static_cast<std::uint32_t>(rng() % (d - e0 + 1));
        out.push_back({invforge::Monomial{e0, e1, d - e0 - e1}, random_elem(*field, rng)});
    }
    return Poly::from_terms(field, std::move(out));
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

/// f(a0, a1, a2) over a prime field, coefficients read as integers.
inline std::uint64_t eval_mod_p(const Poly& f, std::uint64_t a0, std::uint64_t a1, std::uint64_t a2)
{
    const std::uint64_t p = f.field()->p();
    std::uint64_t s = 0;
    for (const auto& t : f.terms()) {
        std::uint64_t v = t.coeff.code();
        v = v * powmod(a0, t.mono.e0, p) % p;
        v = v * powmod(a1, t.mono.e1, p) % p;
        v = v * powmod(a2, t.mono.e2, p) % p;
        s = (s + v) % p;
    }
    return s;
}

inline std::uint64_t mod(std::int64_t v, std::uint64_t p)
{
    const auto r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

}  // namespace testing
