#pragma once

// Arithmetic in F_q, q = p^n with p an odd prime.
//
// Elements are stored as the base-p packing of their coordinates in the power
// basis of the defining modulus: code = c_0 + c_1 p + ... + c_{n-1} p^{n-1}.
// Enumeration order is code order, so 0 and 1 are always the first two
// elements and the prime subfield comes first.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invforge {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Elem {
public:
    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t code) : code_(code) {}

    constexpr std::uint32_t code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }

    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;

private:
    std::uint32_t code_ = 0;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kDefaultMaxQ = 81;

class Field {
public:
    /// Builds F_{p^n} with the smallest monic irreducible modulus (coefficients
    /// compared from the constant term upwards) and the smallest generator of
    /// the unit group in enumeration order. Throws Error on bad input or when
    /// q exceeds max_q.
    static FieldPtr make(std::uint32_t p, std::uint32_t n, std::uint64_t max_q = kDefaultMaxQ);

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t q() const { return q_; }

    /// Monic modulus, coefficients from degree 0 to degree n. For n = 1 this is x.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elem omega() const { return exp_[1]; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    Elem from_int(std::int64_t v) const;
    Elem from_coords(std::span<const std::uint32_t> coords) const;
    std::vector<std::uint32_t> coords(Elem x) const;

    Elem add(Elem a, Elem b) const { return Elem{add_[a.code() * q_ + b.code()]}; }
    Elem neg(Elem a) const { return Elem{neg_[a.code()]}; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const
    {
        if (a.is_zero() || b.is_zero()) return Elem{0};
        return exp_[log_[a.code()] + log_[b.code()]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// Discrete logarithm to base omega; x must be nonzero.
    std::uint32_t log(Elem x) const;
    /// omega^k.
    Elem omega_pow(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
    std::uint32_t multiplicative_order(Elem x) const;

    /// True iff x is an even power of omega. Zero is rejected.
    bool is_quadratic_residue(Elem x) const;

    std::vector<Elem> elements() const;
    std::vector<Elem> units() const;
    std::vector<Elem> residues() const;
    std::vector<Elem> nonresidues() const;

    /// Same p, n and modulus.
    bool same_as(const Field& other) const;

    /// Integer for prime fields, "(c0+c1*x+...)" with zero coordinates
    /// omitted for extension fields.
    std::string to_string(Elem x) const;
    /// Inverse of to_string; also accepts a bare integer in the prime field.
    Elem parse(std::string_view text) const;

    std::string describe() const;

private:
    Field() = default;

    std::uint32_t p_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> neg_;
    std::vector<Elem> exp_;           // omega^i for i in [0, 2(q-1))
    std::vector<std::uint32_t> log_;  // log_[0] unused
};

bool is_prime(std::uint64_t v);

/// Checks irreducibility of a monic polynomial over F_p (coefficients low to
/// high) by trial division against every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

}  // namespace invforge
