#pragma once

// The named invariants of the binary quadratic form, their verification and
// the relation polynomial Phi with B^2 = Delta^q Gamma^2 + J Phi(Delta, J, Gamma).

#include <optional>
#include <string>
#include <vector>

#include "invforge/action.hpp"
#include "invforge/poly.hpp"
#include "invforge/sagbi.hpp"

namespace invforge {

struct InvariantSet {
    FieldPtr field;
    Poly a0;
    /// a1^2 - a0 a2
    Poly delta;
    /// prod_{c in F_q} (a1 + c a0)
    Poly beta;
    /// gamma[k.code()] = prod_{c in F_q} (a2 + 2c a1 + (c^2 - k) a0), for every k in F_q.
    std::vector<Poly> gamma;
    /// product of gamma_k over the nonresidues k
    Poly Gamma;
    /// beta times the product of gamma_k over the residues k
    Poly B;
    /// a0 gamma_0
    Poly J;

    const Poly& gamma_k(Elem k) const { return gamma.at(k.code()); }
    const Poly& gamma0() const { return gamma.front(); }

    /// {a0, Delta, beta, gamma0}
    GenSet p_generators() const;
    /// {Delta, J, Gamma, B}
    GenSet sl2_generators() const;
    /// {Delta, J, Gamma}
    GenSet hsop_generators() const;
};

struct Degrees {
    std::uint32_t delta, beta, gamma, Gamma, B, J;
};
/// Degrees of the named invariants as functions of q.
Degrees expected_degrees(std::uint32_t q);

/// Constructs every invariant as a literal orbit product, then asserts the
/// closed form of beta, the degrees, the lead monomials and the weights.
/// Throws Error naming the failing identity.
InvariantSet build(const FieldPtr& field);

struct InvarianceEntry {
    std::string invariant;
    std::string generator;
    bool pass = false;
};

struct InvarianceReport {
    std::vector<InvarianceEntry> entries;
    bool pass() const;
    /// Entries for one invariant all pass.
    bool invariant_passes(const std::string& name) const;
};

/// Applies every sigma_c to {a0, Delta, beta, gamma0}.
InvarianceReport verify_p_invariance(const InvariantSet& inv);
/// Applies every sigma_c and tau to {Delta, J, Gamma, B}.
InvarianceReport verify_sl2_invariance(const InvariantSet& inv);
InvarianceReport check_invariance(const std::vector<std::pair<std::string, Poly>>& polys,
                                  const std::vector<GroupElem>& generators);

struct PRelationResult {
    /// beta^2 - a0^q gamma_k - Delta (Delta^((q-1)/2) - a0^(q-1))^2
    Poly residual;
    /// zeta restricted to a1 = 0
    Poly zeta_at_a1_zero;
    bool pass() const { return residual.is_zero() && zeta_at_a1_zero.is_zero(); }
};

/// Uses gamma_0 unless another k is given (negative control).
PRelationResult verify_p_relation(const InvariantSet& inv, std::optional<Elem> k = std::nullopt);

struct PhiResult {
    /// B^2 - Delta^q Gamma^2
    Poly relation_lhs;
    Poly quotient;
    Expression phi;
    SubductionResult subduction;
    bool reconstructs = false;
};

/// Throws Error when B^2 - Delta^q Gamma^2 is not zero modulo a0, when the
/// division by J is inexact, or when the quotient does not subduct to zero.
PhiResult compute_phi(const InvariantSet& inv);

struct ParityDecomposition {
    Poly even;
    Poly odd;
    /// odd / B
    Poly odd_quotient;
};

/// Splits an SL_2-invariant by weight parity, certifies both parts invariant
/// and the odd part divisible by B. Throws Error for non-invariant input.
ParityDecomposition parity_decompose_invariant(const Poly& f, const InvariantSet& inv);

/// For every c and nonresidue k, the tau-image of a2 + 2c a1 + (c^2 - k) a0 is
/// (c^2 - k) times the factor with c' = -c/(c^2 - k), k' = k/(c^2 - k)^2, and k'
/// is again a nonresidue. Returns the number of failing (c, k) pairs.
std::size_t count_tau_factor_permutation_failures(const FieldPtr& field);

}  // namespace invforge
