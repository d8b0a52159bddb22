#pragma once

// Sparse polynomials in a0, a1, a2 over F_q.
//
// Monomials are ordered by grevlex with a0 < a1 < a2: total degree first, then
// the monomial with the smaller a0 exponent is larger, then the one with the
// smaller a1 exponent. Terms are always stored in descending order, so the
// first term is the lead term.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "invforge/gf.hpp"

namespace invforge {

enum class Var : std::uint8_t { a0 = 0, a1 = 1, a2 = 2 };

struct Monomial {
    std::uint32_t e0 = 0;
    std::uint32_t e1 = 0;
    std::uint32_t e2 = 0;

    std::uint32_t degree() const { return e0 + e1 + e2; }
    std::uint32_t exponent(Var v) const
    {
        return v == Var::a0 ? e0 : v == Var::a1 ? e1 : e2;
    }
    bool divides(const Monomial& m) const { return e0 <= m.e0 && e1 <= m.e1 && e2 <= m.e2; }

    /// Packed key whose unsigned order is grevlex order.
    std::uint64_t key() const
    {
        constexpr std::uint64_t mask = (1ULL << 21) - 1;
        return (static_cast<std::uint64_t>(degree()) << 42) | ((mask - e0) << 21) | (mask - e1);
    }
    static Monomial from_key(std::uint64_t key)
    {
        constexpr std::uint64_t mask = (1ULL << 21) - 1;
        const auto deg = static_cast<std::uint32_t>(key >> 42);
        const auto e0 = static_cast<std::uint32_t>(mask - ((key >> 21) & mask));
        const auto e1 = static_cast<std::uint32_t>(mask - (key & mask));
        return {e0, e1, deg - e0 - e1};
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        return {a.e0 + b.e0, a.e1 + b.e1, a.e2 + b.e2};
    }
    /// Requires divisor.divides(*this).
    Monomial operator/(const Monomial& divisor) const
    {
        return {e0 - divisor.e0, e1 - divisor.e1, e2 - divisor.e2};
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::strong_ordering grevlex_cmp(const Monomial& m, const Monomial& m2);

struct Term {
    Monomial mono;
    Elem coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

class Poly {
public:
    explicit Poly(FieldPtr field);

    static Poly constant(FieldPtr field, Elem c);
    static Poly variable(FieldPtr field, Var v);
    static Poly monomial(FieldPtr field, const Monomial& m, Elem c);
    /// Sorts, merges equal monomials and drops zero coefficients.
    static Poly from_terms(FieldPtr field, std::vector<Term> terms);

    const FieldPtr& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Throws Error on the zero polynomial.
    const Term& lead_term() const;
    const Monomial& lead_monomial() const { return lead_term().mono; }
    Elem lead_coeff() const { return lead_term().coeff; }

    /// Maximum total degree; the zero polynomial has degree 0.
    std::uint32_t total_degree() const;
    bool is_homogeneous() const;
    Elem coefficient(const Monomial& m) const;

    Poly operator-() const;
    Poly scale(Elem k) const;
    Poly mul_term(const Monomial& m, Elem c) const;
    Poly pow(std::uint32_t e) const;

    Poly& operator+=(const Poly& g);
    Poly& operator-=(const Poly& g);
    Poly& operator*=(const Poly& g);

    friend Poly operator+(Poly f, const Poly& g) { return f += g; }
    friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
    friend Poly operator*(const Poly& f, const Poly& g);
    friend bool operator==(const Poly& f, const Poly& g);

private:
    Poly(FieldPtr field, std::vector<Term> sorted_terms);
    void check_same_field(const Poly& g) const;
    Poly add_scaled(const Poly& g, Elem k) const;

    FieldPtr field_;
    std::vector<Term> terms_;
};

/// Raised by exact_divide; carries the remainder that could not be cancelled.
class DivisionError : public Error {
public:
    DivisionError(const std::string& what, Poly remainder)
        : Error(what), remainder_(std::move(remainder))
    {
    }
    const Poly& remainder() const { return remainder_; }

private:
    Poly remainder_;
};

/// Returns h with f = g * h by repeated lead-term cancellation.
Poly exact_divide(const Poly& f, const Poly& g);

/// Simultaneous substitution a_i -> images[i].
Poly substitute_all(const Poly& f, const std::array<Poly, 3>& images);
Poly substitute(const Poly& f, Var v, const Poly& value);

/// target -> target + lambda * source, expanded binomially.
Poly shear(const Poly& f, Var target, Var source, Elem lambda);
/// v -> s * v
Poly scale_var(const Poly& f, Var v, Elem s);
Poly swap_vars(const Poly& f, Var x, Var y);

struct Weight {
    std::uint32_t value = 0;
    friend bool operator==(const Weight&, const Weight&) = default;
};

/// (e1 + 2 e2) mod (q - 1).
Weight weight(const Monomial& m, const Field& field);
/// The common weight of all terms, if there is one. Zero is isobaric of weight 0.
std::optional<Weight> isobaric_weight(const Poly& f);
/// Splits f by the parity of e1 + 2 e2 into (even part, odd part).
std::pair<Poly, Poly> parity_split(const Poly& f);

/// "c*a0^i*a1^j*a2^k + ..." in descending grevlex; "0" for the zero polynomial.
std::string to_text(const Poly& f);
Poly parse_poly(const FieldPtr& field, std::string_view text);

/// List of {"e0","e1","e2","coeff":[coordinates]} records in descending grevlex.
nlohmann::json to_json(const Poly& f);
Poly poly_from_json(const FieldPtr& field, const nlohmann::json& j);

}  // namespace invforge
