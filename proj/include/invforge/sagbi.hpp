#pragma once

// Subduction against a finite set of generators, bounded tete-a-tete
// enumeration and SAGBI certification up to a degree bound.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "invforge/poly.hpp"

namespace invforge {

using Exponents = std::vector<std::uint32_t>;

class GenSet {
public:
    /// Throws Error on empty input, mismatched lengths, zero polynomials,
    /// duplicate names or mixed fields.
    GenSet(std::vector<std::string> names, std::vector<Poly> polys);

    std::size_t size() const { return polys_.size(); }
    const FieldPtr& field() const { return polys_.front().field(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const Poly& poly(std::size_t i) const { return polys_[i]; }
    const Monomial& lead(std::size_t i) const { return leads_[i]; }
    std::uint32_t degree(std::size_t i) const { return polys_[i].total_degree(); }
    std::uint32_t max_degree() const;

    Monomial lead_of(const Exponents& e) const;
    Elem lead_coeff_of(const Exponents& e) const;
    std::uint32_t degree_of(const Exponents& e) const;

private:
    std::vector<std::string> names_;
    std::vector<Poly> polys_;
    std::vector<Monomial> leads_;
};

/// Memoizes powers of each generator while subducting.
class PowerCache {
public:
    explicit PowerCache(const GenSet& gens);
    const Poly& power(std::size_t i, std::uint32_t e);
    Poly product(const Exponents& e);

private:
    const GenSet& gens_;
    std::vector<std::vector<Poly>> powers_;
};

/// Formal polynomial in the generator names, keyed by exponent vector.
class Expression {
public:
    Expression(FieldPtr field, std::vector<std::string> vars);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Elem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, Elem c);
    /// True iff some term has a positive exponent on variable i.
    bool uses_var(std::size_t i) const;
    Poly eval(const GenSet& gens) const;

    /// Terms in descending lexicographic exponent order, e.g. "2*Delta^3*J".
    std::string to_text() const;
    /// {"vars":[...],"terms":[{"exponents":[...],"coeff":[...]}]}
    nlohmann::json to_json() const;
    static Expression from_json(const FieldPtr& field, const nlohmann::json& j);

    friend bool operator==(const Expression&, const Expression&);

private:
    FieldPtr field_;
    std::vector<std::string> vars_;
    std::map<Exponents, Elem> terms_;
};

/// Every nonnegative e with sum_i e_i LM(g_i) = target, in lexicographic order.
std::vector<Exponents> solve_lead_exponents(const Monomial& target, const GenSet& gens);

struct SubductionResult {
    Poly remainder;
    Expression expr;
    std::size_t steps = 0;
    /// Largest number of exponent solutions seen at a single step.
    std::size_t max_solutions = 0;
};

/// Repeatedly cancels the lead term by a scalar multiple of a product of
/// generators. When several products share the lead monomial the
/// lexicographically smallest exponent vector is used. Guarantees
/// f = expr.eval(gens) + remainder.
SubductionResult subduct(const Poly& f, const GenSet& gens);

struct TeteATete {
    Exponents u;
    Exponents v;
    /// witness = normalizer * (gens^u - scale * gens^v), lead coefficient 1.
    Elem scale;
    Elem normalizer;
    Poly witness;
};

/// All unordered pairs of disjoint-support exponent vectors of polynomial
/// degree at most degree_bound whose products share a lead monomial. u is the
/// lexicographically smaller vector of each pair.
std::vector<TeteATete> find_tete_a_tetes(const GenSet& gens, std::uint32_t degree_bound);

struct SagbiEntry {
    TeteATete pair;
    SubductionResult subduction;
    bool pass = false;
};

struct SagbiReport {
    std::uint32_t degree_bound = 0;
    std::vector<SagbiEntry> entries;
    bool pass = true;

    std::string to_text(const GenSet& gens) const;
    nlohmann::json to_json(const GenSet& gens) const;
};

SagbiReport certify_sagbi(const GenSet& gens, std::uint32_t degree_bound);

struct Membership {
    bool member = false;
    Expression certificate;
    Poly remainder;
};

/// Sound only for generator sets that passed certify_sagbi.
Membership membership(const Poly& f, const GenSet& gens);

std::string exponents_to_text(const Exponents& e, const std::vector<std::string>& names);

}  // namespace invforge
